#ifndef ORBI_ERRORS_HPP
#define ORBI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define ORBI_DEFINE_ERROR(Name)                                              \
    class Name : public Error                                                \
    {                                                                        \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    };

// group_core
ORBI_DEFINE_ERROR(NotAGroup)
ORBI_DEFINE_ERROR(NotMonomorphism)
ORBI_DEFINE_ERROR(GroupTooLarge)

// complex_core
ORBI_DEFINE_ERROR(NotClosed)
ORBI_DEFINE_ERROR(BadDimension)
ORBI_DEFINE_ERROR(DuplicateId)
ORBI_DEFINE_ERROR(BadBoundary)

// orbifold_model
ORBI_DEFINE_ERROR(NotRegular)
ORBI_DEFINE_ERROR(NotOrderPreserving)
ORBI_DEFINE_ERROR(BadAction)
ORBI_DEFINE_ERROR(BadParams)
ORBI_DEFINE_ERROR(InvalidLabeling)

// sectors
ORBI_DEFINE_ERROR(InconsistentShift)
ORBI_DEFINE_ERROR(MissingShiftData)
ORBI_DEFINE_ERROR(BadShiftData)

// invariants
ORBI_DEFINE_ERROR(HasBoundary)
ORBI_DEFINE_ERROR(NoBoundary)

// charts
ORBI_DEFINE_ERROR(NotEquivariant)
ORBI_DEFINE_ERROR(VanishesOnCircle)
ORBI_DEFINE_ERROR(WindingUnresolved)
ORBI_DEFINE_ERROR(NotFiniteOrder)

// cli / io
ORBI_DEFINE_ERROR(ParseError)
ORBI_DEFINE_ERROR(SchemaError)

#undef ORBI_DEFINE_ERROR

} // namespace orbi

#endif // ORBI_ERRORS_HPP

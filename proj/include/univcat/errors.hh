#ifndef UNIVCAT_GUARD_ERRORS_HH
#define UNIVCAT_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace univcat
{
    enum class ErrorKind
    {
        BadParameter,
        PinOutOfRange,
        EmptyGraph,
        NotRigid,
        NotOriented,
        NotInduced,
        NotAHom,
        EmbeddingFailed,
        NotAMonoid,
        ArityMismatch,
        PreconditionFailed,
        NotNonstrict,
        RepresentationFailed,
        SizeBound,
        ParseError,
        ConsistencyError,
        IOError
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    /// Every failure raised by the library carries one of the kinds above, so
    /// callers (and the CLI's exit code mapping) can branch without parsing text.
    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            auto kind() const noexcept -> ErrorKind
            {
                return _kind;
            }
    };
}

#endif

/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_ERRORS_HH
#define VCSP_ERRORS_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcsp
{
    enum class ErrorKind
    {
        MalformedRational,
        ZeroDenominator,
        SchemaError,
        ArityMismatch,
        UnknownElement,
        BadParameter,
        SignatureMismatch,
        ResourceLimit,
        NotACore,
        NotADecomposition,
        PreconditionFailed,
        NoTighteningWitness
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    class VcspError : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            VcspError(ErrorKind kind, const std::string & message);

            auto kind() const -> ErrorKind
            {
                return _kind;
            }
    };

    [[noreturn]] auto fail(ErrorKind kind, const std::string & message) -> void;
}

#endif

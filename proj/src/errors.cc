/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/errors.hh>

using std::string;
using std::string_view;

namespace vcsp
{
    auto error_kind_name(ErrorKind kind) -> string_view
    {
        switch (kind) {
            case ErrorKind::MalformedRational:   return "MalformedRational";
            case ErrorKind::ZeroDenominator:     return "ZeroDenominator";
            case ErrorKind::SchemaError:         return "SchemaError";
            case ErrorKind::ArityMismatch:       return "ArityMismatch";
            case ErrorKind::UnknownElement:      return "UnknownElement";
            case ErrorKind::BadParameter:        return "BadParameter";
            case ErrorKind::SignatureMismatch:   return "SignatureMismatch";
            case ErrorKind::ResourceLimit:       return "ResourceLimit";
            case ErrorKind::NotACore:            return "NotACore";
            case ErrorKind::NotADecomposition:   return "NotADecomposition";
            case ErrorKind::PreconditionFailed:  return "PreconditionFailed";
            case ErrorKind::NoTighteningWitness: return "NoTighteningWitness";
        }
        return "UnknownError";
    }

    VcspError::VcspError(ErrorKind kind, const string & message) :
        std::runtime_error(string(error_kind_name(kind)) + ": " + message),
        _kind(kind)
    {
    }

    auto fail(ErrorKind kind, const string & message) -> void
    {
        throw VcspError(kind, message);
    }
}

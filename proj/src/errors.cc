#include <univcat/errors.hh>

using namespace univcat;

auto univcat::error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::PinOutOfRange: return "PinOutOfRange";
        case ErrorKind::EmptyGraph: return "EmptyGraph";
        case ErrorKind::NotRigid: return "NotRigid";
        case ErrorKind::NotOriented: return "NotOriented";
        case ErrorKind::NotInduced: return "NotInduced";
        case ErrorKind::NotAHom: return "NotAHom";
        case ErrorKind::EmbeddingFailed: return "EmbeddingFailed";
        case ErrorKind::NotAMonoid: return "NotAMonoid";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::NotNonstrict: return "NotNonstrict";
        case ErrorKind::RepresentationFailed: return "RepresentationFailed";
        case ErrorKind::SizeBound: return "SizeBound";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ConsistencyError: return "ConsistencyError";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
    _kind(kind)
{
}

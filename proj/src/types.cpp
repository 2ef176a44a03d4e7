#include "homolocal/types.hpp"

#include <algorithm>
#include <iterator>

namespace homolocal {

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::SealedCenter: return "SealedCenter";
        case ErrorKind::SealedInput: return "SealedInput";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::NoNontrivialClass: return "NoNontrivialClass";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

std::vector<Index> symmetric_difference(const std::vector<Index>& a, const std::vector<Index>& b)
{
    std::vector<Index> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Chain operator+(const Chain& a, const Chain& b)
{
    if (a.dim != b.dim && !a.empty() && !b.empty())
        throw Error(ErrorKind::InvalidArgument, "cannot add chains of different dimensions");
    return Chain{a.empty() ? b.dim : a.dim, symmetric_difference(a.simplices, b.simplices)};
}

}  // namespace homolocal

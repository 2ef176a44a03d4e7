#include "homolocal/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace homolocal {

namespace {

VertexLabel parse_label(std::string_view token, std::size_t line_no)
{
    VertexLabel value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end || value < 0)
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": invalid vertex id '" + std::string(token) + "'");
    return value;
}

/// Next line that is neither blank nor a comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line))
    {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

}  // namespace

LoadedComplex read_cplx(std::istream& in)
{
    std::vector<std::vector<VertexLabel>> simplices;
    std::string line;
    std::size_t line_no = 0;
    while (next_content_line(in, line, line_no))
    {
        std::istringstream tokens(line);
        std::vector<VertexLabel> simplex;
        std::string token;
        while (tokens >> token)
            simplex.push_back(parse_label(token, line_no));
        simplices.push_back(std::move(simplex));
    }
    if (simplices.empty())
        throw Error(ErrorKind::EmptyInput, "no simplices in input");
    return {build_complex(simplices), std::nullopt};
}

LoadedComplex read_off(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!next_content_line(in, line, line_no))
        throw Error(ErrorKind::EmptyInput, "empty OFF file");
    std::istringstream header(line);
    std::string magic;
    header >> magic;
    if (magic != "OFF")
        throw Error(ErrorKind::ParseError, "missing OFF header");

    // Counts may follow the header on the same line.
    std::size_t nv = 0, nf = 0, ne = 0;
    if (!(header >> nv >> nf))
    {
        if (!next_content_line(in, line, line_no))
            throw Error(ErrorKind::ParseError, "missing OFF counts");
        std::istringstream counts(line);
        if (!(counts >> nv >> nf))
            throw Error(ErrorKind::ParseError, "malformed OFF counts");
        counts >> ne;
    }

    LoadedComplex result;
    result.coordinates.emplace(nv);
    ComplexBuilder builder;
    for (std::size_t v = 0; v < nv; ++v)
    {
        if (!next_content_line(in, line, line_no))
            throw Error(ErrorKind::ParseError, "OFF file ends inside the vertex list");
        std::istringstream coords(line);
        auto& p = (*result.coordinates)[v];
        if (!(coords >> p[0] >> p[1] >> p[2]))
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": malformed vertex");
        builder.add({static_cast<VertexLabel>(v)});
    }
    for (std::size_t f = 0; f < nf; ++f)
    {
        if (!next_content_line(in, line, line_no))
            throw Error(ErrorKind::ParseError, "OFF file ends inside the face list");
        std::istringstream face(line);
        std::size_t k = 0;
        face >> k;
        if (k != 3)
            throw Error(ErrorKind::ParseError,
                        "line " + std::to_string(line_no) + ": only triangular faces are supported");
        std::vector<VertexLabel> tri(3);
        for (auto& t : tri)
        {
            std::string token;
            if (!(face >> token))
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": short face");
            t = parse_label(token, line_no);
            if (static_cast<std::size_t>(t) >= nv)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": face index out of range");
        }
        builder.add(std::span<const VertexLabel>(tri));
    }
    if (nv == 0)
        throw Error(ErrorKind::EmptyInput, "OFF file has no vertices");
    result.complex = std::move(builder).build();
    return result;
}

LoadedComplex load_complex(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::string first;
    in >> first;
    in.clear();
    in.seekg(0);
    if (first.rfind("OFF", 0) == 0)
        return read_off(in);
    return read_cplx(in);
}

void write_cplx(std::ostream& out, const SimplicialComplex& complex)
{
    for (const auto& s : complex.maximal_simplices())
    {
        if (complex.is_sealed(s.dim, s.index))
            continue;
        const auto labels = complex.labels_of(s.dim, s.index);
        for (std::size_t k = 0; k < labels.size(); ++k)
            out << (k ? " " : "") << labels[k];
        out << '\n';
    }
}

}  // namespace homolocal

#include "volset/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace volset {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw FormatError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        const std::size_t j = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r')
            ++i;
        if (i > j)
            out.push_back(s.substr(j, i - j));
    }
    return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line, const std::string& what)
{
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        fail(line, "bad " + what + " '" + std::string(s) + "'");
    return v;
}

std::uint32_t parse_param(std::string_view tok, std::string_view key, std::size_t line)
{
    if (tok.substr(0, key.size() + 1) != std::string(key) + "=")
        fail(line, "expected " + std::string(key) + "=<int>, got '" + std::string(tok) + "'");
    const auto v = parse_uint(tok.substr(key.size() + 1), line, std::string(key));
    if (v > UINT32_MAX)
        fail(line, std::string(key) + " out of range");
    return static_cast<std::uint32_t>(v);
}

} // namespace

PointSet parse_pointset(std::string_view text)
{
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos <= text.size();) {
        const auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size())
                lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    auto strip_cr = [](std::string_view s) { return !s.empty() && s.back() == '\r' ? s.substr(0, s.size() - 1) : s; };
    if (lines.empty() || strip_cr(lines[0]) != "volset-pointset v1")
        fail(1, "expected header 'volset-pointset v1'");
    if (lines.size() < 2)
        fail(2, "missing parameter line");

    const auto params = split_ws(lines[1]);
    if (params.size() < 3 || params.size() > 4)
        fail(2, "expected 'p=<int> k=<int> d=<int> [mod=c0,...,ck]'");
    const auto p = parse_param(params[0], "p", 2);
    const auto k = parse_param(params[1], "k", 2);
    const auto d = parse_param(params[2], "d", 2);

    std::optional<std::vector<std::uint32_t>> modulus;
    if (params.size() == 4) {
        auto tok = params[3];
        if (tok.substr(0, 4) != "mod=")
            fail(2, "expected mod=c0,...,ck, got '" + std::string(tok) + "'");
        if (k <= 1)
            fail(2, "mod= is only allowed when k > 1");
        tok.remove_prefix(4);
        std::vector<std::uint32_t> coeffs;
        while (true) {
            const auto comma = tok.find(',');
            const auto v = parse_uint(tok.substr(0, comma), 2, "modulus coefficient");
            if (v > UINT32_MAX)
                fail(2, "modulus coefficient out of range");
            coeffs.push_back(static_cast<std::uint32_t>(v));
            if (comma == std::string_view::npos)
                break;
            tok.remove_prefix(comma + 1);
        }
        modulus = std::move(coeffs);
    }

    std::optional<Field> field;
    try {
        field.emplace(make_field_spec(p, k, std::move(modulus)));
    } catch (const FieldError& ex) {
        fail(2, ex.what());
    }
    if (d < 1 || d > detail::kMaxDim)
        fail(2, "d must be in [1, " + std::to_string(detail::kMaxDim) + "]");

    const std::uint32_t q = field->q();
    std::vector<Vector> points;
    std::map<Vector, std::size_t> first_line;
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const std::size_t line = i + 1;
        const auto toks = split_ws(lines[i]);
        if (toks.empty() || toks[0].front() == '#')
            continue;
        if (toks.size() != d)
            fail(line, "expected " + std::to_string(d) + " coordinates, got " + std::to_string(toks.size()));
        Vector v(d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto x = parse_uint(toks[j], line, "element index");
            if (x >= q)
                fail(line, "element index " + std::string(toks[j]) + " >= q = " + std::to_string(q));
            v[j] = Elem{static_cast<std::uint32_t>(x)};
        }
        const auto [it, inserted] = first_line.emplace(v, line);
        if (!inserted)
            fail(line, "duplicate point (first on line " + std::to_string(it->second) + ")");
        points.push_back(std::move(v));
    }
    return PointSet(*field, d, std::move(points));
}

std::string emit_pointset(const PointSet& e)
{
    const auto& spec = e.field().spec();
    std::ostringstream out;
    out << "volset-pointset v1\n";
    out << "p=" << spec.p << " k=" << spec.k << " d=" << e.dim();
    if (spec.k > 1) {
        out << " mod=";
        for (std::size_t i = 0; i < spec.modulus.size(); ++i)
            out << (i ? "," : "") << spec.modulus[i];
    }
    out << '\n';
    for (const auto& x : e) {
        for (std::size_t j = 0; j < x.size(); ++j)
            out << (j ? " " : "") << x[j].value;
        out << '\n';
    }
    return out.str();
}

PointSet read_pointset(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_pointset(buf.str());
    } catch (const FormatError& ex) {
        throw FormatError(path.string() + ": " + ex.what());
    }
}

void write_pointset(const std::filesystem::path& path, const PointSet& e)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << emit_pointset(e);
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace volset

#include "specdyn/point.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

namespace specdyn {

std::string format_complex(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
    std::string out = buf;
    const double im = z.imag();
    std::snprintf(buf, sizeof buf, "%.17g", im < 0 || (im == 0.0 && std::signbit(im)) ? -im : im);
    out += (im < 0 || (im == 0.0 && std::signbit(im))) ? "-" : "+";
    out += buf;
    out += "i";
    return out;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    return t;
}

// Splits "a+bi" / "a-bi" / "a" / "bi" at the sign that separates the real
// and imaginary part (a '+'/'-' not at position 0 and not an exponent sign).
std::size_t find_split(const std::string& s) {
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') return i;
    }
    return std::string::npos;
}

double parse_real(const std::string& s) {
    if (s.empty()) throw ParseError("empty number");
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad number: '" + s + "'");
    }
    if (pos != s.size()) throw ParseError("trailing junk in number: '" + s + "'");
    if (!std::isfinite(v)) throw ParseError("non-finite component: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::vector<cplx> parse_components(const std::string& text, std::size_t want) {
    std::string s = strip_spaces(text);
    char sep = ',';
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("unbalanced brackets in point: '" + text + "'");
        s = s.substr(1, s.size() - 2);
        sep = ':';
    }
    const auto parts = split(s, sep);
    if (parts.size() != want)
        throw DimensionMismatchError("expected " + std::to_string(want) + " components, got " +
                                     std::to_string(parts.size()));
    std::vector<cplx> out;
    out.reserve(want);
    for (const std::string& p : parts) out.push_back(parse_complex(p));
    return out;
}

} // namespace

cplx parse_complex(const std::string& text) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s.back() == 'i' || s.back() == 'I') {
        s.pop_back();
        const std::size_t cut = find_split(s);
        if (cut == std::string::npos) {
            // purely imaginary: "bi", "i", "-i", "+i"
            if (s.empty() || s == "+") return cplx(0.0, 1.0);
            if (s == "-") return cplx(0.0, -1.0);
            return cplx(0.0, parse_real(s));
        }
        std::string re = s.substr(0, cut);
        std::string im = s.substr(cut);
        if (im == "+") im = "1";
        else if (im == "-") im = "-1";
        return cplx(parse_real(re), parse_real(im));
    }
    return cplx(parse_real(s), 0.0);
}

Affine3 parse_affine3(const std::string& text) {
    const auto c = parse_components(text, 3);
    return {c[0], c[1], c[2]};
}

Affine5 parse_affine5(const std::string& text) {
    const auto c = parse_components(text, 5);
    return {c[0], c[1], c[2], c[3], c[4]};
}

} // namespace specdyn

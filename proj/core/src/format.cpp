#include "rootpoly/format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace rootpoly {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

u64 parse_coeff(const std::string& tok, u64 p) {
    std::string t = strip(tok);
    if (t.empty()) throw ParseError("empty coefficient in polynomial text");
    bool negative = false;
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') {
        negative = t[0] == '-';
        i = 1;
    }
    if (i == t.size()) throw ParseError("sign without digits in polynomial text");
    u64 v = 0;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            throw ParseError("bad coefficient '" + tok + "' in polynomial text");
        // fold digits mod p as we go; arbitrarily long literals stay exact
        v = static_cast<u64>((u128(v) * 10 + static_cast<unsigned>(t[i] - '0')) % p);
    }
    return negative && v != 0 ? p - v : v;
}

} // namespace

DensePoly parse_poly_text(const std::string& text, u64 p) {
    std::string s = strip(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw ParseError("unbalanced brackets in polynomial text");
        s = strip(s.substr(1, s.size() - 2));
    }
    if (s.empty()) throw ParseError("polynomial text needs at least one coefficient");

    std::vector<u64> coeffs;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        std::string tok = comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        coeffs.push_back(parse_coeff(tok, p));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return DensePoly(p, std::move(coeffs));
}

std::string poly_to_text(const DensePoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    const auto& c = f.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    return out.str();
}

std::string resolve_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read polynomial file '" + arg.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace rootpoly

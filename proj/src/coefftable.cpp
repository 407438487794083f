#include "borch/coefftable.hpp"

#include <sstream>
#include <stdexcept>

namespace borch {

namespace {

[[noreturn]] void bad_line(int lineno, const std::string& why) {
    throw std::runtime_error("coefficient table, line " + std::to_string(lineno) + ": " + why);
}

long long parse_int(const std::string& tok, int lineno, const std::string& what) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) bad_line(lineno, what + " is not an integer");
        return v;
    } catch (const std::logic_error&) {
        bad_line(lineno, what + " is not an integer");
    }
}

Rational parse_rat_at(const std::string& tok, int lineno, const std::string& what) {
    try {
        return parse_rat(tok);
    } catch (const std::exception&) {
        bad_line(lineno, what + " is not a rational");
    }
}

}  // namespace

std::string coefftable_str(const VVCoeffs& f) {
    std::string out = "level " + std::to_string(f.N) + "\n";
    out += "sigma " + std::string(f.sigma > 0 ? "1" : "-1") + "\n";
    out += "weight " + rat_str(f.k) + "\n";
    for (const auto& [key, c] : f.entries)
        out += "entry " + rat_str(rat(key.first, 4 * f.N)) + " " + std::to_string(key.second) +
               " " + rat_str(c) + "\n";
    return out;
}

VVCoeffs parse_coefftable(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    VVCoeffs f;
    bool have_level = false, have_sigma = false, have_weight = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) bad_line(lineno, "empty line");

        std::string extra;
        if (key == "level") {
            std::string tok;
            if (!(ls >> tok) || ls >> extra) bad_line(lineno, "expected one value");
            if (have_level || have_sigma || have_weight || !f.entries.empty())
                bad_line(lineno, "level must come first");
            f.N = parse_int(tok, lineno, "level");
            if (f.N < 1) bad_line(lineno, "level must be positive");
            have_level = true;
        } else if (key == "sigma") {
            std::string tok;
            if (!(ls >> tok) || ls >> extra) bad_line(lineno, "expected one value");
            long long s = parse_int(tok, lineno, "sigma");
            if (s != 1 && s != -1) bad_line(lineno, "sigma must be 1 or -1");
            f.sigma = static_cast<int>(s);
            have_sigma = true;
        } else if (key == "weight") {
            std::string tok;
            if (!(ls >> tok) || ls >> extra) bad_line(lineno, "expected one value");
            f.k = parse_rat_at(tok, lineno, "weight");
            have_weight = true;
        } else if (key == "entry") {
            std::string ntok, htok, ctok;
            if (!(ls >> ntok >> htok >> ctok) || ls >> extra)
                bad_line(lineno, "expected three values");
            if (!have_level || !have_sigma || !have_weight)
                bad_line(lineno, "entry before the level/sigma/weight header");
            Rational n = parse_rat_at(ntok, lineno, "index");
            long long h = parse_int(htok, lineno, "residue");
            f.set(n, h, parse_rat_at(ctok, lineno, "coefficient"));
        } else {
            bad_line(lineno, "unknown keyword '" + key + "'");
        }
    }
    if (!have_level || !have_sigma || !have_weight)
        throw std::runtime_error("coefficient table: missing level/sigma/weight header");
    return f;
}

}  // namespace borch

#include "equikh/eta.hpp"

#include <sstream>

namespace equikh {

void LaurentPoly::add(int exp, long long c) {
    if (c == 0) return;
    auto it = coeff.find(exp);
    if (it == coeff.end()) coeff[exp] = c;
    else {
        it->second += c;
        if (it->second == 0) coeff.erase(it);
    }
}

bool LaurentPoly::is_symmetric() const {
    for (auto& [e, c] : coeff)
        if (at(-e) != c) return false;
    return true;
}

long long LaurentPoly::at(int exp) const {
    auto it = coeff.find(exp);
    return it == coeff.end() ? 0 : it->second;
}

long long LaurentPoly::eval_at_one() const {
    long long s = 0;
    for (auto& [e, c] : coeff) s += c;
    return s;
}

std::string LaurentPoly::bracket() const {
    if (!is_symmetric()) throw EtaError("bracket notation needs a symmetric polynomial");
    int top = 0;
    for (auto& [e, c] : coeff) top = std::max(top, e < 0 ? -e : e);
    std::ostringstream os;
    os << "[";
    for (int e = 0; e <= top; ++e) os << (e ? "," : "") << at(e);
    return os.str();
}

std::string LaurentPoly::to_string() const {
    if (coeff.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : coeff) {
        if (!first && c > 0) os << "+";
        if (c == -1 && e != 0) os << "-";
        else if (c != 1 || e == 0) os << c;
        else if (c == 1 && e != 0 && !first) { /* bare t power */ }
        if (e != 0) {
            if (c != 1 && c != -1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::from_bracket(const std::vector<long long>& a) {
    LaurentPoly p;
    for (std::size_t i = 0; i < a.size(); ++i) {
        p.add((int)i, a[i]);
        if (i) p.add(-(int)i, a[i]);
    }
    return p;
}

std::map<int, long long> eta_tilde(const FundamentalRegion& fr) {
    std::map<int, long long> out;
    for (auto [sign, label] : fr.crossings) {
        out[label] += sign;
        if (out[label] == 0) out.erase(label);
    }
    return out;
}

LaurentPoly eta_prime(const std::map<int, long long>& etatilde) {
    LaurentPoly p;
    for (auto& [i, c] : etatilde) {
        p.add(i - 1, c);
        p.add(i, -2 * c);
        p.add(i + 1, c);
    }
    return p;
}

LaurentPoly eta_recover(const LaurentPoly& etaprime) {
    if (!etaprime.is_symmetric()) throw EtaError("eta recovery needs a symmetric polynomial");
    long long a = -etaprime.at(1);
    LaurentPoly out = etaprime;
    out.add(0, -2 * a);
    out.add(1, a);
    out.add(-1, a);
    return out;
}

FundamentalRegion parse_region(const std::string& text) {
    FundamentalRegion fr;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace((unsigned char)ch)) trimmed += ch;
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto comma = trimmed.find(',');
        if (comma == std::string::npos) throw EtaError("region line needs 'sign,label'");
        int sign = std::stoi(trimmed.substr(0, comma));
        int label = std::stoi(trimmed.substr(comma + 1));
        if (sign != 1 && sign != -1) throw EtaError("sign must be +1 or -1");
        fr.crossings.push_back({sign, label});
    }
    return fr;
}

} // namespace equikh

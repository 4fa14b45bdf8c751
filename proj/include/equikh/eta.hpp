#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace equikh {

struct EtaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer Laurent polynomial in t.
struct LaurentPoly {
    std::map<int, long long> coeff; // exponent -> coefficient, zero-free

    void add(int exp, long long c);
    bool is_zero() const { return coeff.empty(); }
    bool is_symmetric() const;
    long long at(int exp) const;
    long long eval_at_one() const;
    bool operator==(const LaurentPoly& o) const { return coeff == o.coeff; }

    // bracket notation [a0, a1, a2, ... for a0 + a1 (t + 1/t) + ...
    // (only for symmetric polynomials)
    std::string bracket() const;
    std::string to_string() const;
    static LaurentPoly from_bracket(const std::vector<long long>& a);
};

// A fundamental-region crossing list: sign and integer label per crossing.
struct FundamentalRegion {
    std::vector<std::pair<int, int>> crossings; // (sign, label)
};

// formal sum sum_p eps_p x_{d_p}, collected by label
std::map<int, long long> eta_tilde(const FundamentalRegion& fr);

// substitute x_i -> t^{i-1} - 2 t^i + t^{i+1}
LaurentPoly eta_prime(const std::map<int, long long>& etatilde);

// recover eta: subtract the unique multiple of (2 - t - 1/t) that kills the
// t-coefficient
LaurentPoly eta_recover(const LaurentPoly& etaprime);

// parse "sign,label" lines
FundamentalRegion parse_region(const std::string& text);

} // namespace equikh

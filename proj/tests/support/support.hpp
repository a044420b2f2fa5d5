#pragma once

#include "plateau/bigint.hpp"
#include "plateau/counting.hpp"
#include "plateau/factorization.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace plateau::testing {

/// "exponent coefficient" per line; absent exponents are zero.
inline std::map<unsigned, BigInt> read_golden(const std::string& name) {
    const std::string path = std::string(PLATEAU_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::map<unsigned, BigInt> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        unsigned e;
        std::string c;
        ls >> e >> c;
        out[e] = BigInt(c);
    }
    return out;
}

inline FpPoly power(const FpPoly& f, unsigned e) {
    FpPoly r = FpPoly::constant(f.modulus(), 1);
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

/// The concrete polynomial of an exponent vector over the primes of sr.
inline FpPoly realize(const SrExponentVector& f, const SrFactorization& sr) {
    const PrimeModulus p = sr.p;
    FpPoly r = power(FpPoly(p, {-1, 1}), 2 * f.e_minus);
    r = r * power(FpPoly(p, {1, 1}), 2 * f.e_plus);
    for (std::size_t i = 0; i < f.e.size(); ++i) r = r * power(sr.sr_primes[i].poly, f.e[i]);
    return r;
}

/// Largest even-degree self-reciprocal divisor of x^n - 1 as an exponent vector.
inline SrExponentVector full_divisor(const SrFactorization& sr) {
    auto ctx = SrContext::from(sr);
    SrExponentVector f = SrExponentVector::one(ctx);
    const auto pv = static_cast<unsigned>(sr.multiplicity);
    f.e_minus = pv / 2;
    f.e_plus = sr.has_x_plus_1 ? pv / 2 : 0;
    f.e.assign(sr.sr_primes.size(), pv);
    return f;
}

}  // namespace plateau::testing

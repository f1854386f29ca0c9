#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qeis/siegel_local.hpp"

namespace qeis {

struct NamedCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

// Random integral eta in the given shape with v_p(q(eta)) = k, cycling k over 0..kmax.
// Roughly a third are non-primitive when k >= 2.
std::vector<QuadVec> sample_etas(const QuadShape& shape, int count, int kmax, std::uint64_t seed);

// The largest r used against the enumeration oracle for a prime (rank-4 shapes).
int oracle_rmax(long p);

struct SuiteOptions {
    std::vector<long> primes;  // empty: {3, 5}
    OracleOptions oracle;
    int per_shape = 50;
};

std::vector<NamedCheck> suite_oracle(const SuiteOptions& opt);
std::vector<NamedCheck> suite_functional(const SuiteOptions& opt);
std::vector<NamedCheck> suite_identities(const SuiteOptions& opt);
std::vector<NamedCheck> suite_denominators(const SuiteOptions& opt);
// "oracle", "functional", "identities", "denominators" or "all"; ValidationError otherwise.
std::vector<NamedCheck> run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace qeis

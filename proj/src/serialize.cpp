#include "mhn/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "mhn/errors.hpp"

namespace mhn {
namespace {

template <typename Exp>
std::vector<Exp> descending(std::vector<Exp> v) {
    std::sort(v.begin(), v.end(), std::greater<Exp>());
    return v;
}

/// Insert `value` at every distinct permutation of `key`.
template <typename Exp>
void expand_orbit(std::map<std::vector<Exp>, Rational>& out,
                  std::vector<Exp> key, const Rational& value) {
    std::sort(key.begin(), key.end());
    do {
        out[key] = value;
    } while (std::next_permutation(key.begin(), key.end()));
}

}  // namespace

nlohmann::json omega_to_json(const PoleBasisDifferential& w) {
    std::map<std::vector<int>, Rational> orbits;
    for (const auto& [k, c] : w.coeffs) {
        orbits[descending(k)] = c;
    }
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : orbits) {
        terms.push_back({{"k", k}, {"c", to_string(c)}});
    }
    return {{"g", w.g}, {"n", w.n}, {"terms", terms}};
}

PoleBasisDifferential omega_from_json(const nlohmann::json& j) {
    PoleBasisDifferential w;
    w.g = j.at("g").get<unsigned>();
    w.n = j.at("n").get<unsigned>();
    for (const auto& term : j.at("terms")) {
        auto k = term.at("k").get<std::vector<int>>();
        if (k.size() != w.n) {
            throw ArityMismatch("term has " + std::to_string(k.size()) +
                                " exponents but n = " + std::to_string(w.n));
        }
        expand_orbit(w.coeffs, k,
                     rational_from_string(term.at("c").get<std::string>()));
    }
    return w;
}

nlohmann::json tensor_to_json(const CoefficientTensor& t) {
    std::map<std::vector<unsigned>, Rational> orbits;
    for (const auto& [a, c] : t.coeffs) {
        orbits[descending(a)] = c;
    }
    nlohmann::json monomials = nlohmann::json::array();
    for (const auto& [a, c] : orbits) {
        monomials.push_back({{"a", a}, {"c", to_string(c)}});
    }
    return {{"g", t.g}, {"n", t.n}, {"monomials", monomials}};
}

CoefficientTensor tensor_from_json(const nlohmann::json& j) {
    CoefficientTensor t;
    t.g = j.at("g").get<unsigned>();
    t.n = j.at("n").get<unsigned>();
    for (const auto& mono : j.at("monomials")) {
        auto a = mono.at("a").get<std::vector<unsigned>>();
        if (a.size() != t.n) {
            throw ArityMismatch("monomial has " + std::to_string(a.size()) +
                                " exponents but n = " + std::to_string(t.n));
        }
        expand_orbit(t.coeffs, a,
                     rational_from_string(mono.at("c").get<std::string>()));
    }
    return t;
}

nlohmann::json hurwitz_map_to_json(
    const std::map<std::pair<unsigned, Partition>, Rational>& values) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, value] : values) {
        j[std::to_string(key.first) + "," + partition_to_string(key.second)] =
            to_string(value);
    }
    return j;
}

std::map<std::pair<unsigned, Partition>, Rational> hurwitz_map_from_json(
    const nlohmann::json& j) {
    std::map<std::pair<unsigned, Partition>, Rational> out;
    for (const auto& [key, value] : j.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos) {
            throw Error("malformed table key \"" + key + "\"");
        }
        unsigned g = static_cast<unsigned>(std::stoul(key.substr(0, comma)));
        Partition mu = partition_from_string(key.substr(comma + 1));
        out[{g, mu}] = rational_from_string(value.get<std::string>());
    }
    return out;
}

std::string wave_to_csv(const BivariateSeries& z) {
    std::ostringstream os;
    os << "d,m,coefficient\n";
    for (unsigned d = 0; d <= z.valid_D; ++d) {
        for (unsigned m = 0; m <= z.valid_M; ++m) {
            os << d << "," << m << "," << to_string(z.at(d, m)) << "\n";
        }
    }
    return os.str();
}

nlohmann::json record_to_json(const ResultRecord& r) {
    nlohmann::json j = {{"key", r.key},
                        {"value", r.value},
                        {"provenance", r.provenance}};
    if (!r.timestamp.empty()) {
        j["timestamp"] = r.timestamp;
    }
    return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord r;
    r.key = j.at("key").get<std::string>();
    r.value = j.at("value").get<std::string>();
    r.provenance = j.at("provenance").get<std::string>();
    if (j.contains("timestamp")) {
        r.timestamp = j.at("timestamp").get<std::string>();
    }
    return r;
}

std::string canonical_dump(const nlohmann::json& j) {
    return j.dump(2) + "\n";
}

}  // namespace mhn

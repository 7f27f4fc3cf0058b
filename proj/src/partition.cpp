#include "mhn/partition.hpp"

#include <algorithm>
#include <sstream>

namespace mhn {

Partition canonical_partition(Partition mu) {
    mu.erase(std::remove(mu.begin(), mu.end(), 0u), mu.end());
    std::sort(mu.begin(), mu.end(), std::greater<unsigned>());
    return mu;
}

unsigned partition_weight(const Partition& mu) {
    unsigned d = 0;
    for (unsigned p : mu) d += p;
    return d;
}

Integer multiplicity_factorial(const Partition& mu) {
    Partition c = canonical_partition(mu);
    Integer f = 1;
    size_t i = 0;
    while (i < c.size()) {
        size_t j = i;
        while (j < c.size() && c[j] == c[i]) ++j;
        f *= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return f;
}

namespace {
void emit_partitions(unsigned rest, unsigned max_part, Partition& cur,
                     std::vector<Partition>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(rest - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(unsigned d) {
    std::vector<Partition> out;
    Partition cur;
    emit_partitions(d, d == 0 ? 1 : d, cur, out);
    return out;
}

std::string partition_to_string(const Partition& mu) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << ")";
    return os.str();
}

Partition partition_from_string(const std::string& s) {
    std::string body = s;
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
        body = body.substr(1, body.size() - 2);
    }
    Partition mu;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            throw Error("malformed partition part: \"" + tok + "\"");
        }
        if (pos != tok.size() || v == 0)
            throw Error("malformed partition part: \"" + tok + "\"");
        mu.push_back(static_cast<unsigned>(v));
    }
    if (mu.empty()) throw Error("empty partition");
    return canonical_partition(mu);
}

}  // namespace mhn

#include "kpow/partition.hpp"

#include "kpow/field.hpp"

#include <sstream>

namespace kpow {

Partition::Partition(std::vector<std::size_t> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        check(parts[i] >= 1, "partition parts must be positive");
        if (i) check(parts[i - 1] >= parts[i], "partition parts must be weakly decreasing");
    }
}

std::size_t Partition::weight() const {
    std::size_t w = 0;
    for (std::size_t p : parts) w += p;
    return w;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

namespace {

void emit_partitions(std::size_t remaining, std::size_t max_part,
                     std::vector<std::size_t>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(std::size_t r) {
    check(r >= 1, "partitions_of expects r >= 1");
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    emit_partitions(r, r, cur, out);
    return out;
}

Partition conjugate(const Partition& mu) {
    if (mu.parts.empty()) return Partition{};
    std::vector<std::size_t> conj(mu.parts[0], 0);
    for (std::size_t p : mu.parts)
        for (std::size_t j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

} // namespace kpow

#ifndef KPOW_PARTITION_HPP
#define KPOW_PARTITION_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace kpow {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<std::size_t> parts;

    Partition() = default;
    explicit Partition(std::vector<std::size_t> p);

    std::size_t weight() const;
    std::size_t length() const { return parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    std::string str() const;
};

/// All partitions of r, in reverse-lexicographic order: (r) first, (1^r) last.
std::vector<Partition> partitions_of(std::size_t r);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& mu);

} // namespace kpow

#endif

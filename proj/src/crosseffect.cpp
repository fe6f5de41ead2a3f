#include "kpow/crosseffect.hpp"

#include "kpow/symfunc.hpp"

#include <sstream>

namespace kpow {

std::string Composition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

namespace {

void emit_compositions(std::size_t remaining, std::size_t slots,
                       std::vector<std::size_t>& cur, std::vector<Composition>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(Composition{cur});
        cur.pop_back();
        return;
    }
    // descending lex: largest first part first
    for (std::size_t j = remaining - slots + 1; j >= 1; --j) {
        cur.push_back(j);
        emit_compositions(remaining - j, slots - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(std::size_t r, std::size_t i) {
    std::vector<Composition> out;
    if (i == 0 || i > r) return out;
    std::vector<std::size_t> cur;
    emit_compositions(r, i, cur, out);
    return out;
}

CrossEffectLayout cross_effect_ranks(std::size_t r, std::size_t i,
                                     const std::vector<std::size_t>& ranks) {
    check(r >= 1, "cross_effect_ranks expects r >= 1");
    check(i >= 1, "cross_effect_ranks expects i >= 1");
    check(ranks.size() == i, "cross_effect_ranks expects one rank per argument");
    CrossEffectLayout layout;
    layout.r = r;
    layout.arity = i;
    layout.blocks = compositions_of(r, i);
    for (const auto& comp : layout.blocks) {
        std::size_t block = 1;
        for (std::size_t k = 0; k < i; ++k) block *= binomial(ranks[k], comp.parts[k]);
        layout.offsets.push_back(layout.total_rank);
        layout.block_ranks.push_back(block);
        layout.total_rank += block;
    }
    return layout;
}

ExactMatrix cross_effect_map(std::size_t r, std::size_t i,
                             const std::vector<ExactMatrix>& maps) {
    check(i >= 1 && maps.size() == i, "cross_effect_map expects i maps");
    check(r >= 1, "cross_effect_map expects r >= 1");
    FieldSpec f = maps.front().field();
    for (const auto& m : maps)
        check(m.field() == f, "cross_effect_map field mismatch");
    std::vector<ExactMatrix> blocks;
    for (const auto& comp : compositions_of(r, i)) {
        ExactMatrix block = compound(maps[0], comp.parts[0]);
        for (std::size_t k = 1; k < i; ++k)
            block = kron(block, compound(maps[k], comp.parts[k]));
        blocks.push_back(std::move(block));
    }
    return direct_sum(blocks, f);
}

Scalar char_e(const ExactMatrix& a, std::size_t k) {
    check(a.is_square(), "char_e expects a square matrix");
    if (k > a.rows()) return Scalar::zero(a.field());
    return compound(a, k).trace();
}

bool verify_cauchy_character(const ExactMatrix& a, const ExactMatrix& b, std::size_t r) {
    check(a.is_square() && b.is_square(), "verify_cauchy_character expects square matrices");
    check(a.field() == b.field(), "verify_cauchy_character field mismatch");
    FieldSpec f = a.field();
    Scalar lhs = char_e(kron(a, b), r);
    std::map<Var, Scalar> assignment;
    for (std::size_t k = 1; k <= r; ++k) {
        assignment[Var::X(k)] = char_e(a, k);
        assignment[Var::Y(k)] = char_e(b, k);
    }
    Scalar rhs = Scalar::zero(f);
    for (const Partition& mu : partitions_of(r)) {
        Scalar sx = schur_in_e(mu, Alphabet::X, r).evaluate(assignment, f);
        Scalar sy = schur_in_e(conjugate(mu), Alphabet::Y, r).evaluate(assignment, f);
        rhs = rhs + sx * sy;
    }
    return lhs == rhs;
}

} // namespace kpow

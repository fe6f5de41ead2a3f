#include "kpow/kops.hpp"

namespace kpow {

namespace {

/// cr_i Lambda^r of a diagonal tuple, read off as a diagonal.
std::vector<Scalar> cross_effect_diagonal(std::size_t r, std::size_t i,
                                          const std::vector<ExactMatrix>& diags) {
    ExactMatrix m = cross_effect_map(r, i, diags);
    std::vector<Scalar> out;
    out.reserve(m.rows());
    for (std::size_t k = 0; k < m.rows(); ++k) out.push_back(m.at(k, k));
    return out;
}

LambdaOutput lambda_cube_impl(const Cube& c, std::size_t r, std::size_t direction) {
    check(r >= 1, "lambda expects r >= 1");
    check(c.dims() == 0 || direction < c.dims(), "distinguished direction out of range");
    const std::size_t n = c.dims();
    const FieldSpec f = c.field();
    const ExactMatrix id = ExactMatrix::identity(f, c.rank());
    LambdaOutput out;
    out.r = r;
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<ExactMatrix> autos;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<ExactMatrix> tuple(i, c.autos()[j]);
            if (j == direction)
                for (std::size_t k = 1; k < i; ++k) tuple[k] = id;
            autos.push_back(cross_effect_map(r, i, tuple));
        }
        const std::size_t term_rank =
            cross_effect_ranks(r, i, std::vector<std::size_t>(i, c.rank())).total_rank;
        if (term_rank == 0) {
            out.per_degree.emplace_back(std::nullopt);
            continue;
        }
        std::optional<EigenData> eigen;
        if (c.eigen()) {
            EigenData e;
            std::vector<ExactMatrix> bases(i, c.eigen()->basis);
            e.basis = cross_effect_map(r, i, bases);
            const ExactMatrix id_diag = ExactMatrix::identity(f, c.rank());
            for (std::size_t j = 0; j < n; ++j) {
                ExactMatrix dj = ExactMatrix::diagonal(f, c.eigen()->diagonals[j]);
                std::vector<ExactMatrix> tuple(i, dj);
                if (j == direction)
                    for (std::size_t k = 1; k < i; ++k) tuple[k] = id_diag;
                e.diagonals.push_back(cross_effect_diagonal(r, i, tuple));
            }
            eigen = std::move(e);
        }
        Cube term(f, term_rank, std::move(autos), std::move(eigen));
        check(commute_check(term.autos()), "cross-effect images must commute");
        out.terms.add(term, i % 2 == 1 ? 1 : -1);
        out.per_degree.emplace_back(std::move(term));
    }
    return out;
}

} // namespace

LambdaOutput lambda_cube(const Cube& c, std::size_t r) {
    return lambda_cube_impl(c, r, 0);
}

LambdaOutput lambda_cube_distinguished(const Cube& c, std::size_t r,
                                       std::size_t direction) {
    return lambda_cube_impl(c, r, direction);
}

GeneralCube cross_effect_cube(const GeneralCube& g, std::size_t r, std::size_t i) {
    check(g.n >= 1, "cross_effect_cube expects n >= 1");
    GeneralCube out;
    out.field = g.field;
    out.n = g.n;
    out.top_edges.resize(g.n);
    out.bottom_edges.resize(g.n);
    auto vertex_tuple_ranks = [&](std::size_t mask) {
        std::vector<std::size_t> ranks(i, g.vertex_ranks[mask | 1]);
        ranks[0] = g.vertex_ranks[mask];
        return ranks;
    };
    for (std::size_t mask = 0; mask < g.vertices(); ++mask)
        out.vertex_ranks.push_back(
            cross_effect_ranks(r, i, vertex_tuple_ranks(mask)).total_rank);
    for (std::size_t dir = 0; dir < g.n; ++dir) {
        const std::size_t bit = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
            if (!(mask & bit)) continue;
            for (bool top : {true, false}) {
                const auto& edges = top ? g.top_edges : g.bottom_edges;
                std::vector<ExactMatrix> tuple;
                if (dir == 0) {
                    // slots 2..i stay at the first-coordinate-1 vertex
                    tuple.assign(i, ExactMatrix::identity(g.field, g.vertex_ranks[mask]));
                    tuple[0] = edges[dir].at(mask);
                } else if (mask & 1) {
                    tuple.assign(i, edges[dir].at(mask));
                } else {
                    tuple.assign(i, edges[dir].at(mask | 1));
                    tuple[0] = edges[dir].at(mask);
                }
                (top ? out.top_edges : out.bottom_edges)[dir].emplace(
                    mask, cross_effect_map(r, i, tuple));
            }
        }
    }
    return out;
}

GeneralLambdaOutput lambda_general_cube_full(const GeneralCube& g, std::size_t r) {
    g.validate();
    check(r >= 1, "lambda expects r >= 1");
    GeneralLambdaOutput out;
    out.r = r;
    for (std::size_t i = 1; i <= r; ++i) {
        GeneralCube ci = cross_effect_cube(g, r, i);
        if (ci.vertex_ranks[0] == 0) continue; // rank-zero cross-effect
        NormalizedCube nc = normalize_cube(ci);
        out.sum.add(nc.cube, i % 2 == 1 ? 1 : -1);
        out.terms.push_back(GeneralLambdaTerm{i, std::move(ci), std::move(nc)});
    }
    return out;
}

FormalSum lambda_general_cube(const GeneralCube& g, std::size_t r) {
    return lambda_general_cube_full(g, r).sum;
}

FormalSum adams(const Cube& c, std::size_t r) {
    check(r >= 1, "adams expects r >= 1");
    const long long factor =
        (r % 2 == 1 ? 1 : -1) * static_cast<long long>(r);
    return lambda_cube(c, r).terms.scaled(factor);
}

namespace {

/// Lambda^k of a map, with Lambda^0 the unit (1x1 identity).
ExactMatrix lam(const ExactMatrix& a, std::size_t k) {
    if (k == 0) return ExactMatrix::identity(a.field(), 1);
    return compound(a, k);
}

} // namespace

HillerOutput hiller_lambda(std::size_t rank, const ExactMatrix& a, std::size_t r) {
    check(r >= 1, "hiller_lambda expects r >= 1");
    check(a.rows() == rank && a.cols() == rank, "matrix does not match the rank");
    check(is_invertible(a), "hiller_lambda expects an invertible matrix");
    const FieldSpec f = a.field();
    HillerOutput out;
    // raw: u = 0..r, tuples (s, b_1..b_u) with s >= 0, b_k >= 1, s + sum b = r
    for (std::size_t u = 0; u <= r; ++u) {
        const long long sign = u % 2 == 0 ? 1 : -1;
        const std::size_t s_max = r - u; // each b_k takes at least 1
        for (std::size_t s = u == 0 ? r : 0; s <= s_max; ++s) {
            std::vector<Composition> rests =
                u == 0 ? std::vector<Composition>{Composition{{}}}
                       : compositions_of(r - s, u);
            for (const auto& rest : rests) {
                std::size_t tail = 1;
                for (std::size_t b : rest.parts) tail *= binomial(rank, b);
                const std::size_t cube_rank = binomial(rank, s) * tail;
                if (cube_rank == 0) continue;
                ExactMatrix m = kron(lam(a, s), ExactMatrix::identity(f, tail));
                Cube term(f, cube_rank, {m});
                if (s == 0) {
                    out.dropped.push_back(term);
                }
                out.raw.add(term, sign);
            }
        }
    }
    // reduced: drop s = 0 and regroup by i = u + 1, assembling the blocks of
    // each composition (s, b_1, ..., b_u) in layout order
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<ExactMatrix> blocks;
        std::size_t total = 0;
        for (const auto& comp : compositions_of(r, i)) {
            std::size_t tail = 1;
            for (std::size_t k = 1; k < i; ++k) tail *= binomial(rank, comp.parts[k]);
            blocks.push_back(kron(compound(a, comp.parts[0]),
                                  ExactMatrix::identity(f, tail)));
            total += binomial(rank, comp.parts[0]) * tail;
        }
        if (total == 0) continue;
        ExactMatrix m = direct_sum(blocks, f);
        out.reduced.add(Cube(f, total, {m}), i % 2 == 1 ? 1 : -1);
    }
    return out;
}

FormalSum external_product_sum(const FormalSum& x, const FormalSum& y) {
    FormalSum out;
    for (const auto& [cx, kx] : x.terms())
        for (const auto& [cy, ky] : y.terms())
            out.add(external_product(cx, cy), kx * ky);
    return out;
}

} // namespace kpow

#include "kpow/random_gen.hpp"

namespace kpow {

Scalar random_scalar(FieldSpec f, Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return Scalar(f, dist(rng));
}

Scalar random_nonzero_scalar(FieldSpec f, Rng& rng, long lo, long hi) {
    for (;;) {
        Scalar s = random_scalar(f, rng, lo, hi);
        if (!s.is_zero()) return s;
    }
}

ExactMatrix random_matrix(FieldSpec f, std::size_t rows, std::size_t cols, Rng& rng,
                          long lo, long hi) {
    ExactMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_scalar(f, rng, lo, hi);
    return m;
}

ExactMatrix random_invertible(FieldSpec f, std::size_t n, Rng& rng, long lo, long hi) {
    for (;;) {
        ExactMatrix m = random_matrix(f, n, n, rng, lo, hi);
        if (is_invertible(m)) return m;
    }
}

std::vector<ExactMatrix> random_commuting_tuple(FieldSpec f, std::size_t rank,
                                                std::size_t n, Rng& rng) {
    ExactMatrix m = random_invertible(f, rank, rng);
    ExactMatrix m2 = matmul(m, m);
    std::vector<ExactMatrix> out;
    while (out.size() < n) {
        Scalar c0 = random_scalar(f, rng), c1 = random_scalar(f, rng),
               c2 = random_scalar(f, rng);
        ExactMatrix a = ExactMatrix::identity(f, rank).scaled(c0) + m.scaled(c1) +
                        m2.scaled(c2);
        if (is_invertible(a)) out.push_back(std::move(a));
    }
    return out;
}

std::vector<Scalar> rational_unit_pool() {
    FieldSpec q = FieldSpec::rationals();
    return {Scalar(q, 2), Scalar(q, 3), Scalar(q, 5), Scalar(q, -1),
            Scalar(q, mpq_class(1, 2))};
}

Cube random_diagonalizable_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng,
                                const std::vector<Scalar>& units) {
    check(!units.empty(), "unit pool must not be empty");
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    ExactMatrix basis = random_invertible(f, rank, rng);
    ExactMatrix basis_inv = inverse(basis);
    EigenData eigen;
    eigen.basis = basis;
    std::vector<ExactMatrix> autos;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> diag;
        for (std::size_t k = 0; k < rank; ++k) diag.push_back(units[pick(rng)]);
        autos.push_back(
            matmul(matmul(basis, ExactMatrix::diagonal(f, diag)), basis_inv));
        eigen.diagonals.push_back(std::move(diag));
    }
    return Cube(f, rank, std::move(autos), std::move(eigen));
}

Cube random_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng) {
    return Cube(f, rank, random_commuting_tuple(f, rank, n, rng));
}

GeneralCube random_general_cube(FieldSpec f, std::size_t rank, std::size_t n, Rng& rng) {
    Cube c = random_cube(f, rank, n, rng);
    GeneralCube g = cube_to_bincx(c);
    std::vector<ExactMatrix> phi, phi_inv;
    for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
        phi.push_back(random_invertible(f, rank, rng));
        phi_inv.push_back(inverse(phi.back()));
    }
    GeneralCube out = g;
    for (std::size_t dir = 0; dir < n; ++dir) {
        const std::size_t bit = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
            if (!(mask & bit)) continue;
            out.top_edges[dir][mask] = matmul(
                matmul(phi[mask & ~bit], g.top_edges[dir].at(mask)), phi_inv[mask]);
            out.bottom_edges[dir][mask] = matmul(
                matmul(phi[mask & ~bit], g.bottom_edges[dir].at(mask)), phi_inv[mask]);
        }
    }
    return out;
}

namespace {

std::vector<ExactMatrix> conjugated_standard_acyclic(
    FieldSpec f, const std::vector<std::size_t>& ranks,
    const std::vector<std::size_t>& b, const std::vector<ExactMatrix>& u,
    const std::vector<ExactMatrix>& u_inv) {
    std::vector<ExactMatrix> diffs;
    const std::size_t d = ranks.size() - 1;
    for (std::size_t k = 1; k <= d; ++k) {
        ExactMatrix std_diff(f, ranks[k - 1], ranks[k]);
        // B-block rows of degree k-1 receive the A-block of degree k
        for (std::size_t i = 0; i < b[k]; ++i)
            std_diff.at(b[k - 1] + i, i) = Scalar::one(f);
        diffs.push_back(matmul(matmul(u[k - 1], std_diff), u_inv[k]));
    }
    return diffs;
}

} // namespace

BinaryComplexPair random_acyclic_pair(FieldSpec f, const std::vector<std::size_t>& ranks,
                                      Rng& rng) {
    const std::size_t d = ranks.size() - 1;
    // b[k] = rank of d_k; exactness forces b[k] = ranks[k] - b[k+1]
    std::vector<std::size_t> b(d + 2, 0);
    for (std::size_t k = d; k >= 1; --k) {
        check(ranks[k] >= b[k + 1], "rank vector admits no acyclic complex");
        b[k] = ranks[k] - b[k + 1];
    }
    check(b[1] == ranks[0], "rank vector admits no acyclic complex");
    std::vector<ExactMatrix> u, u_inv, w, w_inv;
    for (std::size_t k = 0; k <= d; ++k) {
        u.push_back(random_invertible(f, ranks[k], rng));
        u_inv.push_back(inverse(u.back()));
        w.push_back(random_invertible(f, ranks[k], rng));
        w_inv.push_back(inverse(w.back()));
    }
    BinaryComplexPair out;
    out.field = f;
    out.ranks = ranks;
    out.top = conjugated_standard_acyclic(f, ranks, b, u, u_inv);
    out.bottom = conjugated_standard_acyclic(f, ranks, b, w, w_inv);
    return out;
}

BoundedComplex random_bounded_complex(FieldSpec f, const std::vector<std::size_t>& ranks,
                                      Rng& rng) {
    BoundedComplex out;
    out.field = f;
    out.ranks = ranks;
    if (ranks.size() == 1) return out;
    // choose d_1 freely, then d_{k+1} = (kernel basis of d_k) * random
    out.diffs.push_back(random_matrix(f, ranks[0], ranks[1], rng));
    for (std::size_t k = 1; k + 1 < ranks.size(); ++k) {
        ExactMatrix ker = kernel_basis(out.diffs.back());
        ExactMatrix mix = random_matrix(f, ker.cols(), ranks[k + 1], rng);
        out.diffs.push_back(matmul(ker, mix));
    }
    return out;
}

} // namespace kpow

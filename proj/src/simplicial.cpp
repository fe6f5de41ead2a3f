#include "kpow/simplicial.hpp"

#include <algorithm>

namespace kpow {

namespace {

/// Monotone surjections [n] ->> [k] as value lists, k = 0..min(n, kmax),
/// ordered by k ascending then lexicographically on values.
std::vector<GammaSummand> level_summands(std::size_t n, std::size_t kmax,
                                         const std::vector<std::size_t>& ranks) {
    std::vector<GammaSummand> out;
    std::size_t offset = 0;
    for (std::size_t k = 0; k <= std::min(n, kmax); ++k) {
        // a surjection is determined by the k positions in 1..n where the
        // value increases; enumerate those subsets in lex order
        for (const auto& incs : subsets_lex(n, k)) {
            std::vector<std::size_t> values(n + 1, 0);
            std::size_t v = 0, next = 0;
            for (std::size_t t = 1; t <= n; ++t) {
                if (next < incs.size() && incs[next] == t - 1) {
                    ++v;
                    ++next;
                }
                values[t] = v;
            }
            out.push_back(GammaSummand{k, values, offset});
            offset += ranks[k];
        }
    }
    return out;
}

/// The structure map Gamma(alpha) for a monotone map alpha: [m] -> [n]
/// given by its values. Blocks: identity along equal epi factorizations,
/// the differential when the mono part misses exactly the bottom element,
/// zero otherwise.
ExactMatrix gamma_structure_map(const BoundedComplex& c,
                                const std::vector<GammaSummand>& source, // level n
                                const std::vector<GammaSummand>& target, // level m
                                std::size_t target_dim, std::size_t source_dim,
                                const std::vector<std::size_t>& alpha) {
    ExactMatrix out(c.field, target_dim, source_dim);
    for (const auto& s : source) {
        // composite values eta o alpha, then epi-mono factorization
        std::vector<std::size_t> comp(alpha.size());
        for (std::size_t t = 0; t < alpha.size(); ++t) comp[t] = s.values[alpha[t]];
        std::vector<std::size_t> image(comp);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const std::size_t m = image.size() - 1; // epi part surjects onto [m]
        const ExactMatrix* block = nullptr;
        ExactMatrix ident;
        if (m == s.k) {
            ident = ExactMatrix::identity(c.field, c.ranks[s.k]);
            block = &ident;
        } else if (m + 1 == s.k && image[0] >= 1) {
            block = &c.diffs[s.k - 1]; // C_k -> C_{k-1}
        } else {
            continue;
        }
        std::vector<std::size_t> epi(comp.size());
        for (std::size_t t = 0; t < comp.size(); ++t)
            epi[t] = static_cast<std::size_t>(
                std::lower_bound(image.begin(), image.end(), comp[t]) - image.begin());
        auto it = std::find_if(target.begin(), target.end(), [&](const GammaSummand& g) {
            return g.k == m && g.values == epi;
        });
        check(it != target.end(), "gamma: epi factor not found among summands");
        for (std::size_t i = 0; i < block->rows(); ++i)
            for (std::size_t j = 0; j < block->cols(); ++j)
                out.at(it->offset + i, s.offset + j) = block->at(i, j);
    }
    return out;
}

std::vector<std::size_t> coface_values(std::size_t n, std::size_t i) {
    // delta^i: [n-1] -> [n], skipping i
    std::vector<std::size_t> v(n);
    for (std::size_t t = 0; t < n; ++t) v[t] = t < i ? t : t + 1;
    return v;
}

std::vector<std::size_t> codegeneracy_values(std::size_t n, std::size_t j) {
    // sigma^j: [n+1] -> [n], repeating j
    std::vector<std::size_t> v(n + 2);
    for (std::size_t t = 0; t <= n + 1; ++t) v[t] = t <= j ? t : t - 1;
    return v;
}

} // namespace

std::size_t GammaLayout::identity_offset(std::size_t level) const {
    for (const auto& s : levels[level])
        if (s.k == level) return s.offset;
    throw Error("identity summand not present at this level");
}

TruncatedSimplicialModule gamma(const BoundedComplex& c, std::size_t D,
                                GammaLayout& layout_out) {
    c.validate();
    check(D >= c.top_degree(), "truncation below the support of the complex");
    const std::size_t d = c.top_degree();
    TruncatedSimplicialModule s;
    s.field = c.field;
    layout_out.levels.clear();
    for (std::size_t n = 0; n <= D; ++n) {
        auto summands = level_summands(n, d, c.ranks);
        std::size_t dim = 0;
        for (const auto& g : summands) dim += c.ranks[g.k];
        s.dims.push_back(dim);
        layout_out.levels.push_back(std::move(summands));
    }
    s.faces.resize(D + 1);
    s.degens.resize(D);
    for (std::size_t n = 1; n <= D; ++n)
        for (std::size_t i = 0; i <= n; ++i)
            s.faces[n].push_back(gamma_structure_map(c, layout_out.levels[n],
                                                     layout_out.levels[n - 1],
                                                     s.dims[n - 1], s.dims[n],
                                                     coface_values(n, i)));
    for (std::size_t n = 0; n + 1 <= D; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            s.degens[n].push_back(gamma_structure_map(c, layout_out.levels[n],
                                                      layout_out.levels[n + 1],
                                                      s.dims[n + 1], s.dims[n],
                                                      codegeneracy_values(n, j)));
    return s;
}

TruncatedSimplicialModule gamma(const BoundedComplex& c, std::size_t D) {
    GammaLayout layout;
    return gamma(c, D, layout);
}

bool TruncatedSimplicialModule::satisfies_simplicial_identities() const {
    const std::size_t D = truncation();
    // d_i d_j = d_{j-1} d_i for i < j
    for (std::size_t n = 2; n <= D; ++n)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (matmul(faces[n - 1][i], faces[n][j]) !=
                    matmul(faces[n - 1][j - 1], faces[n][i]))
                    return false;
    // s_i s_j = s_{j+1} s_i for i <= j
    for (std::size_t n = 0; n + 2 <= D; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i)
                if (matmul(degens[n + 1][i], degens[n][j]) !=
                    matmul(degens[n + 1][j + 1], degens[n][i]))
                    return false;
    // mixed identities
    for (std::size_t n = 0; n + 1 <= D; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                ExactMatrix lhs = matmul(faces[n + 1][i], degens[n][j]);
                if (i == j || i == j + 1) {
                    if (!lhs.is_identity()) return false;
                } else if (i < j) {
                    if (n == 0) continue; // no s on level -1
                    if (lhs != matmul(degens[n - 1][j - 1], faces[n][i])) return false;
                } else {
                    if (n == 0) continue;
                    if (lhs != matmul(degens[n - 1][j], faces[n][i - 1])) return false;
                }
            }
    return true;
}

TruncatedSimplicialModule apply_functor_degreewise(const TruncatedSimplicialModule& s,
                                                   std::size_t r) {
    check(r >= 1, "apply_functor_degreewise expects r >= 1");
    TruncatedSimplicialModule out;
    out.field = s.field;
    for (std::size_t dim : s.dims) out.dims.push_back(binomial(dim, r));
    out.faces.resize(s.faces.size());
    out.degens.resize(s.degens.size());
    for (std::size_t n = 0; n < s.faces.size(); ++n)
        for (const auto& f : s.faces[n]) out.faces[n].push_back(compound(f, r));
    for (std::size_t n = 0; n < s.degens.size(); ++n)
        for (const auto& g : s.degens[n]) out.degens[n].push_back(compound(g, r));
    return out;
}

TruncatedSimplicialModule levelwise_tensor(const TruncatedSimplicialModule& a,
                                           const TruncatedSimplicialModule& b) {
    check(a.field == b.field, "levelwise_tensor field mismatch");
    check(a.dims.size() == b.dims.size(), "levelwise_tensor truncation mismatch");
    TruncatedSimplicialModule out;
    out.field = a.field;
    for (std::size_t n = 0; n < a.dims.size(); ++n)
        out.dims.push_back(a.dims[n] * b.dims[n]);
    out.faces.resize(a.faces.size());
    out.degens.resize(a.degens.size());
    for (std::size_t n = 1; n < a.faces.size(); ++n)
        for (std::size_t i = 0; i < a.faces[n].size(); ++i)
            out.faces[n].push_back(kron(a.faces[n][i], b.faces[n][i]));
    for (std::size_t n = 0; n < a.degens.size(); ++n)
        for (std::size_t j = 0; j < a.degens[n].size(); ++j)
            out.degens[n].push_back(kron(a.degens[n][j], b.degens[n][j]));
    return out;
}

namespace {

/// Core of N: kernel bases of the stacked faces d_1..d_n per level, then
/// d_0 restricted to them.
struct FaceData {
    FieldSpec field;
    std::vector<std::size_t> dims;
    std::vector<std::vector<ExactMatrix>> faces; // levels 1..upto populated
};

NormalizedComplex normalize_core(const FaceData& fd, std::size_t upto) {
    NormalizedComplex out;
    out.bases.push_back(ExactMatrix::identity(fd.field, fd.dims[0]));
    for (std::size_t n = 1; n <= upto; ++n) {
        ExactMatrix stacked(fd.field, (fd.dims[n - 1]) * n, fd.dims[n]);
        for (std::size_t i = 1; i <= n; ++i) {
            const ExactMatrix& f = fd.faces[n][i];
            for (std::size_t row = 0; row < f.rows(); ++row)
                for (std::size_t col = 0; col < f.cols(); ++col)
                    stacked.at((i - 1) * fd.dims[n - 1] + row, col) = f.at(row, col);
        }
        out.bases.push_back(kernel_basis(stacked));
    }
    out.complex.field = fd.field;
    for (const auto& k : out.bases) out.complex.ranks.push_back(k.cols());
    for (std::size_t n = 1; n <= upto; ++n)
        out.complex.diffs.push_back(
            solve(out.bases[n - 1], matmul(fd.faces[n][0], out.bases[n])));
    return out;
}

FaceData face_data_of(const TruncatedSimplicialModule& s, std::size_t upto) {
    FaceData fd{s.field, s.dims, {}};
    fd.faces.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n) fd.faces[n] = s.faces[n];
    return fd;
}

} // namespace

NormalizedComplex normalize(const TruncatedSimplicialModule& s, std::size_t upto) {
    check(upto + 1 <= s.truncation(), "normalize: degree exceeds the truncation bound - 1");
    return normalize_core(face_data_of(s, upto), upto);
}

std::vector<ExactMatrix> restrict_to_bases(const TruncatedSimplicialModule& s,
                                           const std::vector<ExactMatrix>& bases) {
    std::vector<ExactMatrix> diffs;
    for (std::size_t n = 1; n < bases.size(); ++n)
        diffs.push_back(solve(bases[n - 1], matmul(s.faces[n][0], bases[n])));
    return diffs;
}

namespace {

/// Compound faces of a gamma module, levels 1..upto, without degeneracies.
FaceData compound_faces(const TruncatedSimplicialModule& s, std::size_t r,
                        std::size_t upto) {
    FaceData fd{s.field, {}, {}};
    for (std::size_t dim : s.dims) fd.dims.push_back(binomial(dim, r));
    fd.faces.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n)
        for (const auto& f : s.faces[n]) fd.faces[n].push_back(compound(f, r));
    return fd;
}

} // namespace

BinaryComplexPair lambda_via_dold_kan(const BinaryComplexPair& pair, std::size_t r) {
    pair.validate();
    check(r >= 1, "lambda_via_dold_kan expects r >= 1");
    const std::size_t d = pair.top_degree();
    const std::size_t upto = r * d;
    const std::size_t D = upto + 1;
    TruncatedSimplicialModule gt = gamma(pair.top_complex(), D);
    TruncatedSimplicialModule gb = gamma(pair.bottom_complex(), D);
    // the faces d_1..d_n never involve the differential: shared graded data
    for (std::size_t n = 1; n <= upto; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            check(gt.faces[n][i] == gb.faces[n][i],
                  "gamma faces d_{i>=1} must not depend on the differential");
    FaceData ft = compound_faces(gt, r, upto);
    NormalizedComplex top = normalize_core(ft, upto);
    // only d_0 differs on the bottom; reuse the kernel bases
    FaceData fb{gb.field, ft.dims, {}};
    fb.faces.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n) {
        fb.faces[n].push_back(compound(gb.faces[n][0], r));
        for (std::size_t i = 1; i <= n; ++i) fb.faces[n].push_back(ft.faces[n][i]);
    }
    BinaryComplexPair out;
    out.field = pair.field;
    out.ranks = top.complex.ranks;
    out.top = top.complex.diffs;
    for (std::size_t n = 1; n <= upto; ++n)
        out.bottom.push_back(
            solve(top.bases[n - 1], matmul(fb.faces[n][0], top.bases[n])));
    return out;
}

KoszulDoubleComplex koszul_double_complex(std::size_t r, const ExactMatrix& a) {
    check(r >= 1, "koszul_double_complex expects r >= 1");
    const std::size_t p = a.cols(); // rank of the degree-1 entry P
    const std::size_t q = a.rows(); // rank of the degree-0 entry Q
    KoszulDoubleComplex out;
    out.r = r;
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<std::size_t> top_ranks(i, p);
        std::vector<std::size_t> bottom_ranks(i, p);
        bottom_ranks[0] = q;
        out.top_ranks.push_back(cross_effect_ranks(r, i, top_ranks).total_rank);
        out.bottom_ranks.push_back(cross_effect_ranks(r, i, bottom_ranks).total_rank);
        std::vector<ExactMatrix> maps(i, ExactMatrix::identity(a.field(), p));
        maps[0] = a;
        out.verticals.push_back(cross_effect_map(r, i, maps));
    }
    // column i contributes to total degrees i (top row) and i-1 (bottom row)
    out.total_ranks.assign(r + 1, 0);
    for (std::size_t i = 1; i <= r; ++i) {
        out.total_ranks[i] += out.top_ranks[i - 1];
        out.total_ranks[i - 1] += out.bottom_ranks[i - 1];
    }
    long euler = 0;
    for (std::size_t k = 0; k <= r; ++k)
        euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(out.total_ranks[k]);
    out.euler_characteristic = euler;
    return out;
}

BinaryComplexPair simplicial_tensor(const BinaryComplexPair& c,
                                    const BinaryComplexPair& d, std::size_t upto) {
    c.validate();
    d.validate();
    check(c.field == d.field, "simplicial_tensor field mismatch");
    check(upto >= c.top_degree() + d.top_degree(),
          "simplicial_tensor: truncation too small to capture the support");
    const std::size_t D = upto + 1;
    TruncatedSimplicialModule ct = gamma(c.top_complex(), D);
    TruncatedSimplicialModule cb = gamma(c.bottom_complex(), D);
    TruncatedSimplicialModule dt = gamma(d.top_complex(), D);
    TruncatedSimplicialModule db = gamma(d.bottom_complex(), D);
    TruncatedSimplicialModule tensor_top = levelwise_tensor(ct, dt);
    TruncatedSimplicialModule tensor_bot = levelwise_tensor(cb, db);
    for (std::size_t n = 1; n <= upto; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            check(tensor_top.faces[n][i] == tensor_bot.faces[n][i],
                  "tensor faces d_{i>=1} must not depend on the differential");
    NormalizedComplex top = normalize_core(face_data_of(tensor_top, upto), upto);
    BinaryComplexPair out;
    out.field = c.field;
    out.ranks = top.complex.ranks;
    out.top = top.complex.diffs;
    out.bottom = restrict_to_bases(tensor_bot, top.bases);
    return out;
}

} // namespace kpow

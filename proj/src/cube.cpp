#include "kpow/cube.hpp"

#include <sstream>

namespace kpow {

Cube::Cube(FieldSpec field, std::size_t rank, std::vector<ExactMatrix> autos,
           std::optional<EigenData> eigen)
    : field_(field), rank_(rank), autos_(std::move(autos)), eigen_(std::move(eigen)) {
    for (const auto& a : autos_) {
        check(a.field() == field_, "cube automorphism in the wrong field");
        check(a.rows() == rank_ && a.cols() == rank_,
              "cube automorphism does not match the rank");
    }
    check(commute_check(autos_), "cube automorphisms must commute and be invertible");
    if (eigen_) {
        check(eigen_->diagonals.size() == autos_.size(),
              "eigen-data needs one diagonal tuple per direction");
        check(eigen_->basis.rows() == rank_ && eigen_->basis.cols() == rank_,
              "eigen basis does not match the rank");
        check(is_invertible(eigen_->basis), "eigen basis must be invertible");
        for (std::size_t i = 0; i < autos_.size(); ++i) {
            check(eigen_->diagonals[i].size() == rank_,
                  "eigen diagonal tuple does not match the rank");
            ExactMatrix d = ExactMatrix::diagonal(field_, eigen_->diagonals[i]);
            check(matmul(autos_[i], eigen_->basis) == matmul(eigen_->basis, d),
                  "eigen-data does not diagonalize the automorphisms");
        }
    }
}

bool Cube::operator==(const Cube& o) const {
    return field_ == o.field_ && rank_ == o.rank_ && autos_ == o.autos_;
}

bool Cube::operator<(const Cube& o) const {
    if (field_.p != o.field_.p) return field_.p < o.field_.p;
    if (rank_ != o.rank_) return rank_ < o.rank_;
    if (autos_.size() != o.autos_.size()) return autos_.size() < o.autos_.size();
    for (std::size_t i = 0; i < autos_.size(); ++i)
        for (std::size_t r = 0; r < rank_; ++r)
            for (std::size_t c = 0; c < rank_; ++c) {
                const Scalar &a = autos_[i].at(r, c), &b = o.autos_[i].at(r, c);
                if (a != b) return a < b;
            }
    return false;
}

std::string Cube::str() const {
    std::ostringstream os;
    os << "[" << field_.str() << "^" << rank_;
    for (const auto& a : autos_) os << "; " << a.str();
    os << "]";
    return os.str();
}

void GeneralCube::validate() const {
    check(vertex_ranks.size() == vertices(), "general cube needs 2^n vertex ranks");
    check(top_edges.size() == n && bottom_edges.size() == n,
          "general cube needs one edge family per direction");
    auto edge_at = [&](std::size_t dir, std::size_t mask, bool top) -> const ExactMatrix& {
        const auto& family = top ? top_edges[dir] : bottom_edges[dir];
        auto it = family.find(mask);
        check(it != family.end(), "general cube is missing an edge");
        return it->second;
    };
    for (std::size_t dir = 0; dir < n; ++dir) {
        const std::size_t bit = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < vertices(); ++mask) {
            if (!(mask & bit)) continue;
            for (bool top : {true, false}) {
                const ExactMatrix& e = edge_at(dir, mask, top);
                check(e.field() == field, "general cube edge in the wrong field");
                check(e.rows() == vertex_ranks[mask & ~bit] && e.cols() == vertex_ranks[mask],
                      "general cube edge shape mismatch");
                check(e.is_square() && is_invertible(e),
                      "general cube edges must be invertible");
            }
        }
    }
    // all mixed squares commute, in both flavors
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t bi = std::size_t{1} << i, bj = std::size_t{1} << j;
            for (std::size_t mask = 0; mask < vertices(); ++mask) {
                if (!(mask & bi) || !(mask & bj)) continue;
                for (bool ti : {true, false})
                    for (bool tj : {true, false}) {
                        const ExactMatrix lhs =
                            matmul(edge_at(i, mask & ~bj, ti), edge_at(j, mask, tj));
                        const ExactMatrix rhs =
                            matmul(edge_at(j, mask & ~bi, tj), edge_at(i, mask, ti));
                        check(lhs == rhs, "general cube square fails to commute");
                    }
            }
        }
}

bool is_diagonal(const GeneralCube& g) {
    for (std::size_t dir = 0; dir < g.n; ++dir)
        if (g.top_edges[dir] == g.bottom_edges[dir]) return true;
    return false;
}

GeneralCube cube_to_bincx(const Cube& c) {
    GeneralCube g;
    g.field = c.field();
    g.n = c.dims();
    g.vertex_ranks.assign(g.vertices(), c.rank());
    g.top_edges.resize(g.n);
    g.bottom_edges.resize(g.n);
    const ExactMatrix id = ExactMatrix::identity(c.field(), c.rank());
    for (std::size_t dir = 0; dir < g.n; ++dir) {
        const std::size_t bit = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
            if (!(mask & bit)) continue;
            g.top_edges[dir].emplace(mask, c.autos()[dir]);
            g.bottom_edges[dir].emplace(mask, id);
        }
    }
    return g;
}

BinaryComplexPair cube_to_complex_pair(const Cube& c) {
    check(c.dims() == 1, "cube_to_complex_pair expects a 1-cube");
    BinaryComplexPair out;
    out.field = c.field();
    out.ranks = {c.rank(), c.rank()};
    out.top = {c.autos()[0]};
    out.bottom = {ExactMatrix::identity(c.field(), c.rank())};
    return out;
}

NormalizedCube normalize_cube(const GeneralCube& g) {
    g.validate();
    if (g.n == 0) {
        Cube c(g.field, g.vertex_ranks[0], {});
        return NormalizedCube{c, {ExactMatrix::identity(g.field, g.vertex_ranks[0])}};
    }
    const std::size_t last = g.n - 1;
    const std::size_t bit = std::size_t{1} << last;
    // the 0-slice in the last direction is an (n-1)-cube
    GeneralCube slice;
    slice.field = g.field;
    slice.n = last;
    slice.vertex_ranks.assign(slice.vertices(), 0);
    slice.top_edges.resize(last);
    slice.bottom_edges.resize(last);
    for (std::size_t mask = 0; mask < slice.vertices(); ++mask)
        slice.vertex_ranks[mask] = g.vertex_ranks[mask];
    for (std::size_t dir = 0; dir < last; ++dir) {
        const std::size_t db = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < slice.vertices(); ++mask) {
            if (!(mask & db)) continue;
            slice.top_edges[dir].emplace(mask, g.top_edges[dir].at(mask));
            slice.bottom_edges[dir].emplace(mask, g.bottom_edges[dir].at(mask));
        }
    }
    NormalizedCube inner = normalize_cube(slice);
    const std::size_t p = inner.cube.rank();
    // beta trick in the last direction, then push through the straightening
    // of the slice; all conjugated components must coincide
    std::optional<ExactMatrix> last_auto;
    for (std::size_t mask = 0; mask < slice.vertices(); ++mask) {
        const ExactMatrix& alpha = g.top_edges[last].at(mask | bit);
        const ExactMatrix& beta = g.bottom_edges[last].at(mask | bit);
        ExactMatrix e = matmul(alpha, inverse(beta));
        ExactMatrix f =
            matmul(matmul(inner.certificate[mask], e), inverse(inner.certificate[mask]));
        if (!last_auto)
            last_auto = f;
        else
            check(*last_auto == f,
                  "normalize_cube: straightened components disagree "
                  "(input is not a valid binary cube)");
    }
    std::vector<ExactMatrix> autos = inner.cube.autos();
    autos.push_back(*last_auto);
    Cube cube(g.field, p, std::move(autos));
    std::vector<ExactMatrix> cert(g.vertices(), ExactMatrix());
    for (std::size_t mask = 0; mask < slice.vertices(); ++mask) {
        cert[mask] = inner.certificate[mask];
        cert[mask | bit] =
            matmul(inner.certificate[mask], g.bottom_edges[last].at(mask | bit));
    }
    return NormalizedCube{cube, std::move(cert)};
}

bool verify_normalization(const GeneralCube& g, const NormalizedCube& nc) {
    const Cube& c = nc.cube;
    if (g.n != c.dims()) return false;
    for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
        const ExactMatrix& phi = nc.certificate[mask];
        if (phi.rows() != c.rank() || phi.cols() != g.vertex_ranks[mask]) return false;
        if (!is_invertible(phi)) return false;
    }
    for (std::size_t dir = 0; dir < g.n; ++dir) {
        const std::size_t bit = std::size_t{1} << dir;
        for (std::size_t mask = 0; mask < g.vertices(); ++mask) {
            if (!(mask & bit)) continue;
            // A_i phi_v = phi_{v'} alpha_v  and  phi_v = phi_{v'} beta_v
            if (matmul(c.autos()[dir], nc.certificate[mask]) !=
                matmul(nc.certificate[mask & ~bit], g.top_edges[dir].at(mask)))
                return false;
            if (nc.certificate[mask] !=
                matmul(nc.certificate[mask & ~bit], g.bottom_edges[dir].at(mask)))
                return false;
        }
    }
    return true;
}

Cube external_product(const Cube& x, const Cube& y) {
    check(x.field() == y.field(), "external product field mismatch");
    const FieldSpec f = x.field();
    const ExactMatrix idx = ExactMatrix::identity(f, x.rank());
    const ExactMatrix idy = ExactMatrix::identity(f, y.rank());
    std::vector<ExactMatrix> autos;
    for (const auto& a : x.autos()) autos.push_back(kron(a, idy));
    for (const auto& b : y.autos()) autos.push_back(kron(idx, b));
    std::optional<EigenData> eigen;
    if (x.eigen() && y.eigen()) {
        EigenData e;
        e.basis = kron(x.eigen()->basis, y.eigen()->basis);
        for (const auto& dx : x.eigen()->diagonals) {
            std::vector<Scalar> diag;
            for (std::size_t i = 0; i < x.rank(); ++i)
                for (std::size_t j = 0; j < y.rank(); ++j) diag.push_back(dx[i]);
            e.diagonals.push_back(std::move(diag));
        }
        for (const auto& dy : y.eigen()->diagonals) {
            std::vector<Scalar> diag;
            for (std::size_t i = 0; i < x.rank(); ++i)
                for (std::size_t j = 0; j < y.rank(); ++j) diag.push_back(dy[j]);
            e.diagonals.push_back(std::move(diag));
        }
        eigen = std::move(e);
    }
    return Cube(f, x.rank() * y.rank(), std::move(autos), std::move(eigen));
}

Cube permute_directions(const Cube& c, const std::vector<std::size_t>& sigma) {
    check(sigma.size() == c.dims(), "permutation size mismatch");
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t s : sigma) {
        check(s < sigma.size() && !seen[s], "not a permutation");
        seen[s] = true;
    }
    std::vector<ExactMatrix> autos;
    for (std::size_t i = 0; i < sigma.size(); ++i) autos.push_back(c.autos()[sigma[i]]);
    std::optional<EigenData> eigen;
    if (c.eigen()) {
        EigenData e;
        e.basis = c.eigen()->basis;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            e.diagonals.push_back(c.eigen()->diagonals[sigma[i]]);
        eigen = std::move(e);
    }
    return Cube(c.field(), c.rank(), std::move(autos), std::move(eigen));
}

void FormalSum::add(const Cube& c, long long coeff) {
    if (coeff == 0 || c.rank() == 0) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalSum FormalSum::operator+(const FormalSum& o) const {
    FormalSum out = *this;
    for (const auto& [c, k] : o.terms_) out.add(c, k);
    return out;
}

FormalSum FormalSum::operator-(const FormalSum& o) const {
    FormalSum out = *this;
    for (const auto& [c, k] : o.terms_) out.add(c, -k);
    return out;
}

FormalSum FormalSum::scaled(long long c) const {
    FormalSum out;
    if (c == 0) return out;
    for (const auto& [cube, k] : terms_) out.add(cube, k * c);
    return out;
}

bool FormalSum::operator==(const FormalSum& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    return true;
}

std::string FormalSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, k] : terms_) {
        if (first) {
            if (k < 0) os << "-";
            first = false;
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        long long a = k < 0 ? -k : k;
        if (a != 1) os << a << "*";
        os << c.str();
    }
    return os.str();
}

} // namespace kpow

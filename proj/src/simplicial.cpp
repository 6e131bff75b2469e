#include "zk/simplicial.hpp"

#include <algorithm>
#include <numeric>

namespace zk {

const std::vector<VSet> SimplicialComplex::kNoSimplices{};

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<int>>& maximal_simplices, int m) {
    if (m < 0 || m > kMaxLabel) throw ValidationError("vertex count m out of range [0,64]");
    SimplicialComplex K;
    K.ground_ = vrange(m);
    for (const auto& verts : maximal_simplices) {
        VSet s = 0;
        for (int v : verts) {
            if (v < 1 || v > m) throw ValidationError("vertex label out of range [1,m]: " + std::to_string(v));
            if (vhas(s, v)) throw ValidationError("duplicate vertex in simplex: " + std::to_string(v));
            s |= vbit(v);
        }
        K.insert_closed(s);
    }
    for (int v = 1; v <= m; ++v) K.insert_closed(vbit(v));
    K.finalize_dims();
    return K;
}

SimplicialComplex SimplicialComplex::on_ground(VSet ground) {
    SimplicialComplex K;
    K.ground_ = ground;
    for (int v : vlist(ground)) K.insert_closed(vbit(v));
    K.finalize_dims();
    return K;
}

void SimplicialComplex::add_simplex(VSet s) {
    if ((s & ~ground_) != 0) throw ValidationError("simplex uses vertices outside the ground set");
    insert_closed(s);
    finalize_dims();
}

void SimplicialComplex::insert_closed(VSet s) {
    if (simplices_.count(s)) return;
    simplices_.insert(s);
    // Insert all facets (and recursively all faces).
    VSet rest = s;
    while (rest) {
        u64 low = rest & (~rest + 1);
        insert_closed(s ^ low);
        rest ^= low;
    }
}

void SimplicialComplex::finalize_dims() {
    int maxd = -1;
    for (u64 s : simplices_) maxd = std::max(maxd, vcard(s) - 1);
    dim_ = maxd;
    by_dim_.assign(static_cast<size_t>(maxd + 2), {});
    for (u64 s : simplices_) by_dim_[static_cast<size_t>(vcard(s))].push_back(s);
    for (auto& v : by_dim_) std::sort(v.begin(), v.end(), lex_less);
}

const std::vector<VSet>& SimplicialComplex::simplices_of_dim(int d) const {
    size_t idx = static_cast<size_t>(d + 1);
    if (d < -1 || idx >= by_dim_.size()) return kNoSimplices;
    return by_dim_[idx];
}

std::vector<VSet> SimplicialComplex::all_simplices() const {
    std::vector<VSet> out;
    out.reserve(simplices_.size());
    for (int d = -1; d <= dim_; ++d)
        for (VSet s : simplices_of_dim(d)) out.push_back(s);
    return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(VSet J) const {
    if ((J & ~ground_) != 0) throw ValidationError("full_subcomplex: J not contained in ground set");
    SimplicialComplex K;
    K.ground_ = J;
    for (u64 s : simplices_)
        if ((s & ~J) == 0) K.simplices_.insert(s);
    K.finalize_dims();
    return K;
}

bool SimplicialComplex::is_cone() const {
    for (int v : vlist(ground_)) {
        VSet vb = vbit(v);
        bool apex = true;
        for (u64 s : simplices_)
            if (!simplices_.count(s | vb)) {
                apex = false;
                break;
            }
        if (apex) return true;
    }
    return false;
}

IntMat SimplicialComplex::coboundary_matrix(int p) const {
    const auto& dom = simplices_of_dim(p);
    const auto& cod = simplices_of_dim(p + 1);
    std::map<VSet, int, bool (*)(VSet, VSet)> row_index(lex_less);
    for (size_t i = 0; i < cod.size(); ++i) row_index[cod[i]] = static_cast<int>(i);

    IntMat M(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
        VSet s = dom[j];
        VSet candidates = ground_ & ~s;
        while (candidates) {
            u64 low = candidates & (~candidates + 1);
            candidates ^= low;
            VSet t = s | low;
            auto it = row_index.find(t);
            if (it == row_index.end()) continue;
            int pos = vcard(s & (low - 1));  // vertices of s below the inserted one
            M.at(it->second, static_cast<int>(j)) = (pos % 2 == 0) ? 1 : -1;
        }
    }
    return M;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const {
    return ground_ == o.ground_ && simplices_ == o.simplices_;
}

Cochain Cochain::chi(const SimplicialComplex& K, VSet simplex) {
    if (!K.contains(simplex)) throw ValidationError("chi: simplex not in complex");
    Cochain c(K, vcard(simplex) - 1);
    c.coeffs[simplex] = 1;
    return c;
}

void Cochain::add_term(VSet s, i64 c) {
    if (c == 0) return;
    if (!complex->contains(s)) throw ValidationError("cochain term on a non-simplex");
    if (vcard(s) != degree + 1) throw ValidationError("cochain term of wrong dimension");
    auto it = coeffs.find(s);
    if (it == coeffs.end()) {
        coeffs[s] = c;
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) coeffs.erase(it);
    }
}

Cochain Cochain::operator+(const Cochain& o) const {
    if (degree != o.degree || complex != o.complex) throw ValidationError("cochain sum: mismatched degree or complex");
    Cochain r = *this;
    for (const auto& [s, c] : o.coeffs) r.add_term(s, c);
    return r;
}

Cochain Cochain::operator-() const {
    Cochain r = *this;
    for (auto& [s, c] : r.coeffs) c = checked_neg(c);
    return r;
}

std::vector<i64> Cochain::to_vector() const {
    const auto& basis = complex->simplices_of_dim(degree);
    std::vector<i64> v(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = coeffs.find(basis[i]);
        if (it != coeffs.end()) v[i] = it->second;
    }
    return v;
}

Cochain Cochain::from_vector(const SimplicialComplex& K, int degree, const std::vector<i64>& v) {
    const auto& basis = K.simplices_of_dim(degree);
    if (v.size() != basis.size()) throw InternalError("Cochain::from_vector length mismatch");
    Cochain c(K, degree);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) c.coeffs[basis[i]] = v[i];
    return c;
}

std::string Cochain::render() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : coeffs) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 mag = c < 0 ? -c : c;
        if (mag != 1) out += std::to_string(mag);
        out += "chi" + vset_to_string(s);
    }
    return out;
}

Cochain coboundary(const Cochain& c) {
    const SimplicialComplex& K = *c.complex;
    Cochain r(K, c.degree + 1);
    for (const auto& [s, coef] : c.coeffs) {
        VSet candidates = K.ground() & ~s;
        while (candidates) {
            u64 low = candidates & (~candidates + 1);
            candidates ^= low;
            VSet t = s | low;
            if (!K.contains(t)) continue;
            int pos = vcard(s & (low - 1));
            r.add_term(t, (pos % 2 == 0) ? coef : checked_neg(coef));
        }
    }
    return r;
}

std::string AbelianGroup::render() const {
    if (is_zero()) return "0";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (i64 d : torsion) {
        if (!out.empty()) out += " + ";
        out += "Z/" + std::to_string(d);
    }
    return out;
}

namespace {

std::vector<std::pair<i64, int>> factorize(i64 n) {
    std::vector<std::pair<i64, int>> f;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

}  // namespace

AbelianGroup AbelianGroup::direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out;
    out.free_rank = a.free_rank + b.free_rank;
    // Primary decomposition, then reassemble invariant factors.
    std::map<i64, std::vector<int>> primary;  // prime -> exponents (descending later)
    for (const auto& list : {a.torsion, b.torsion})
        for (i64 d : list)
            for (auto [p, e] : factorize(d)) primary[p].push_back(e);
    size_t count = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        count = std::max(count, es.size());
    }
    std::vector<i64> inv(count, 1);
    for (auto& [p, es] : primary)
        for (size_t i = 0; i < es.size(); ++i) {
            i64 pe = 1;
            for (int k = 0; k < es[i]; ++k) pe = checked_mul(pe, p);
            inv[i] = checked_mul(inv[i], pe);
        }
    std::sort(inv.begin(), inv.end());
    out.torsion = std::move(inv);
    return out;
}

CohomologyPiece::CohomologyPiece(IntMat d_prev, IntMat d_cur)
    : n_(d_cur.cols), d_prev_(std::move(d_prev)), d_cur_(std::move(d_cur)) {
    if (d_prev_.rows != n_) throw InternalError("CohomologyPiece: matrix shapes disagree");
    if (!d_cur_.mul(d_prev_).is_zero()) throw InternalError("CohomologyPiece: d∘d != 0");

    IntMat K = kernel_basis(d_cur_);  // n x k
    int k = K.cols;

    // Express im(d_prev) in kernel coordinates: K X = d_prev (exact).
    SmithForm ksnf = smith_normal_form(K);
    IntMat X(k, d_prev_.cols);
    for (int j = 0; j < d_prev_.cols; ++j) {
        std::vector<i64> col(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) col[static_cast<size_t>(i)] = d_prev_.at(i, j);
        auto x = solve_integer(ksnf, col);
        if (!x) throw InternalError("CohomologyPiece: image not inside kernel");
        for (int i = 0; i < k; ++i) X.at(i, j) = (*x)[static_cast<size_t>(i)];
    }

    SmithForm xsnf = smith_normal_form(X);
    adapted_ = K.mul(xsnf.Uinv);  // columns: adapted kernel basis K'
    adapted_snf_ = smith_normal_form(adapted_);

    orders_.assign(static_cast<size_t>(k), 0);
    for (int i = 0; i < xsnf.rank; ++i) orders_[static_cast<size_t>(i)] = xsnf.divisors[static_cast<size_t>(i)];

    group_.free_rank = k - xsnf.rank;
    for (int i = 0; i < xsnf.rank; ++i)
        if (xsnf.divisors[static_cast<size_t>(i)] > 1) group_.torsion.push_back(xsnf.divisors[static_cast<size_t>(i)]);
}

bool CohomologyPiece::is_cocycle(const std::vector<i64>& z) const {
    for (i64 v : d_cur_.apply(z))
        if (v != 0) return false;
    return true;
}

std::vector<i64> CohomologyPiece::class_coords(const std::vector<i64>& z) const {
    if (!is_cocycle(z)) throw InternalError("class_coords: not a cocycle");
    auto w = solve_integer(adapted_snf_, z);
    if (!w) throw InternalError("class_coords: cocycle not in kernel lattice");
    std::vector<i64> coords;
    // Torsion coordinates (orders > 1) reduced mod order, then free ones.
    for (size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] > 1) {
            i64 r = (*w)[i] % orders_[i];
            if (r < 0) r += orders_[i];
            coords.push_back(r);
        }
    for (size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] == 0) coords.push_back((*w)[i]);
    return coords;
}

bool CohomologyPiece::class_is_zero(const std::vector<i64>& z) const {
    for (i64 c : class_coords(z))
        if (c != 0) return false;
    return true;
}

std::vector<std::vector<i64>> CohomologyPiece::generator_cocycles() const {
    std::vector<std::vector<i64>> gens;
    for (size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] > 1) {
            std::vector<i64> g(static_cast<size_t>(n_));
            for (int r = 0; r < n_; ++r) g[static_cast<size_t>(r)] = adapted_.at(r, static_cast<int>(i));
            gens.push_back(std::move(g));
        }
    for (size_t i = 0; i < orders_.size(); ++i)
        if (orders_[i] == 0) {
            std::vector<i64> g(static_cast<size_t>(n_));
            for (int r = 0; r < n_; ++r) g[static_cast<size_t>(r)] = adapted_.at(r, static_cast<int>(i));
            gens.push_back(std::move(g));
        }
    return gens;
}

bool CohomologyPiece::in_span(const std::vector<std::vector<i64>>& gens, const std::vector<i64>& z) const {
    if (!is_cocycle(z)) throw InternalError("in_span: target is not a cocycle");
    IntMat G(n_, static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) {
        if (static_cast<int>(gens[j].size()) != n_) throw InternalError("in_span: generator length mismatch");
        for (int i = 0; i < n_; ++i) G.at(i, static_cast<int>(j)) = gens[j][static_cast<size_t>(i)];
    }
    return solve_integer(G.hstack(d_prev_), z).has_value();
}

const CohomologyPiece& ReducedCohomology::piece(int degree) const {
    size_t idx = static_cast<size_t>(degree + 1);
    if (degree < -1 || idx >= pieces.size()) throw InternalError("ReducedCohomology::piece out of range");
    return pieces[idx];
}

AbelianGroup ReducedCohomology::group(int degree) const {
    size_t idx = static_cast<size_t>(degree + 1);
    if (degree < -1 || idx >= pieces.size()) return {};
    return pieces[idx].group();
}

ReducedCohomology reduced_cohomology(const SimplicialComplex& K) {
    ReducedCohomology out;
    int top = K.dim();
    for (int d = -1; d <= top; ++d) {
        IntMat d_prev = d == -1 ? IntMat(static_cast<int>(K.simplices_of_dim(-1).size()), 0)
                                : K.coboundary_matrix(d - 1);
        out.pieces.emplace_back(std::move(d_prev), K.coboundary_matrix(d));
    }
    return out;
}

}  // namespace zk

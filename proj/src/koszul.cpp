#include "zk/koszul.hpp"

#include <algorithm>

namespace zk {

std::string Multidegree::render() const {
    return "(-" + std::to_string(p) + "; 2*" + vset_to_string(support) + ")";
}

RElement RElement::monomial(const SimplicialComplex& K, VSet J, VSet I, i64 coeff) {
    RElement e(K);
    e.add_term({J, I}, coeff);
    return e;
}

void RElement::add_term(RMonomial m, i64 coeff) {
    if (coeff == 0) return;
    if ((m.J & m.I) != 0) throw ValidationError("RMonomial parts not disjoint");
    if (((m.J | m.I) & ~K_->ground()) != 0) throw ValidationError("RMonomial uses vertices outside the complex");
    if (!K_->contains(m.I)) return;  // v_I = 0 in the face ring
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = coeff;
    } else {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

RElement RElement::operator+(const RElement& o) const {
    if (K_ != o.K_ && !o.is_zero() && !is_zero()) throw ValidationError("RElement sum over different complexes");
    RElement r = is_zero() && K_ == nullptr ? o : *this;
    if (&r != &o)
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

RElement RElement::operator-(const RElement& o) const { return *this + o.scaled(-1); }

RElement RElement::operator-() const { return scaled(-1); }

RElement RElement::scaled(i64 c) const {
    RElement r(*K_);
    if (c == 0) return r;
    for (const auto& [m, coeff] : terms_) r.terms_[m] = checked_mul(coeff, c);
    return r;
}

bool RElement::is_homogeneous(Multidegree* out) const {
    if (terms_.empty()) return true;
    Multidegree md = terms_.begin()->first.multidegree();
    for (const auto& [m, c] : terms_)
        if (!(m.multidegree() == md)) return false;
    if (out) *out = md;
    return true;
}

bool RElement::is_degree_homogeneous(int* out) const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    if (out) *out = d;
    return true;
}

std::string RElement::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 mag = c < 0 ? -c : c;
        bool unit_monomial = m.J == 0 && m.I == 0;
        if (mag != 1 || unit_monomial) out += std::to_string(mag);
        if (m.J != 0) out += "u" + vset_to_string(m.J);
        if (m.I != 0) out += "v" + vset_to_string(m.I);
    }
    return out;
}

namespace {

void skip_spaces(const std::string& s, size_t& i) {
    while (i < s.size() && s[i] == ' ') ++i;
}

VSet parse_vset(const std::string& s, size_t& i) {
    if (i >= s.size() || s[i] != '{') throw ValidationError("RElement parse: expected '{'");
    ++i;
    VSet out = 0;
    while (i < s.size() && s[i] != '}') {
        size_t j = i;
        while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw ValidationError("RElement parse: expected vertex label");
        int v = std::stoi(s.substr(i, j - i));
        out |= vbit(v);
        i = j;
        if (i < s.size() && s[i] == ',') ++i;
    }
    if (i >= s.size()) throw ValidationError("RElement parse: unterminated '{'");
    ++i;
    return out;
}

}  // namespace

RElement RElement::parse(const SimplicialComplex& K, const std::string& text) {
    RElement e(K);
    size_t i = 0;
    skip_spaces(text, i);
    if (text.substr(i) == "0") return e;
    bool first = true;
    while (i < text.size()) {
        skip_spaces(text, i);
        i64 sign = 1;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+') throw ValidationError("RElement parse: leading '+'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_spaces(text, i);
        } else if (!first) {
            throw ValidationError("RElement parse: expected '+' or '-' between terms");
        }
        first = false;
        i64 mag = 1;
        size_t j = i;
        while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            mag = std::stoll(text.substr(i, j - i));
            i = j;
        }
        RMonomial m;
        if (i < text.size() && text[i] == 'u') {
            ++i;
            m.J = parse_vset(text, i);
        }
        if (i < text.size() && text[i] == 'v') {
            ++i;
            m.I = parse_vset(text, i);
        }
        if (!K.contains(m.I)) throw ValidationError("RElement parse: polynomial part is not a simplex");
        e.add_term(m, checked_mul(sign, mag));
        skip_spaces(text, i);
    }
    return e;
}

namespace {

// Sign of merging the sorted exterior blocks J then J' into one sorted
// block: (-1)^{#inversions}.
int shuffle_sign(VSet J1, VSet J2) {
    int inversions = 0;
    for (int b : vlist(J2)) inversions += vcard(J1 & ~(vbit(b) | (vbit(b) - 1)));
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

RElement multiply(const RElement& x, const RElement& y) {
    if (x.complex() != y.complex() && x.complex() && y.complex())
        throw ValidationError("multiply: elements over different complexes");
    const SimplicialComplex& K = *(x.complex() ? x.complex() : y.complex());
    RElement r(K);
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) {
            VSet sx = mx.J | mx.I, sy = my.J | my.I;
            if ((sx & sy) != 0) continue;          // u², v², uv relations
            if (!K.contains(mx.I | my.I)) continue;  // Stanley-Reisner
            int sign = shuffle_sign(mx.J, my.J);
            r.add_term({mx.J | my.J, mx.I | my.I}, checked_mul(checked_mul(cx, cy), sign));
        }
    return r;
}

RElement differential(const RElement& x) {
    const SimplicialComplex& K = *x.complex();
    RElement r(K);
    for (const auto& [m, c] : x.terms()) {
        int pos = 0;
        for (int j : vlist(m.J)) {
            i64 s = (pos % 2 == 0) ? c : checked_neg(c);
            r.add_term({m.J ^ vbit(j), m.I | vbit(j)}, s);
            ++pos;
        }
    }
    return r;
}

std::vector<RMonomial> r_basis(const SimplicialComplex& K, const Multidegree& md) {
    std::vector<RMonomial> out;
    int want = vcard(md.support) - md.p;
    if (want < 0) return out;
    SimplicialComplex sub = K.full_subcomplex(md.support);
    for (VSet L : sub.simplices_of_dim(want - 1)) out.push_back({md.support & ~L, L});
    return out;
}

int epsilon_sign(VSet L, VSet J) {
    // Product over l in L of (-1)^{position of l within J}.
    int total = 0;
    for (int l : vlist(L)) total += vcard(J & (vbit(l) - 1));
    return total % 2 == 0 ? 1 : -1;
}

Strand::Strand(const SimplicialComplex& K, VSet support) : K_(&K), support_(support) {
    SimplicialComplex sub = K.full_subcomplex(support);
    int top = vcard(support);
    basis_.resize(static_cast<size_t>(top) + 1);
    for (int t = 0; t <= top; ++t)
        for (VSet L : sub.simplices_of_dim(t - 1)) basis_[static_cast<size_t>(t)].push_back({support & ~L, L});
}

const std::vector<RMonomial>& Strand::basis(int poly_size) const {
    static const std::vector<RMonomial> empty;
    if (poly_size < 0 || poly_size >= pieces()) return empty;
    return basis_[static_cast<size_t>(poly_size)];
}

IntMat Strand::differential_matrix(int poly_size) const {
    const auto& dom = basis(poly_size);
    const auto& cod = basis(poly_size + 1);
    std::map<VSet, int, bool (*)(VSet, VSet)> row(lex_less);
    for (size_t i = 0; i < cod.size(); ++i) row[cod[i].I] = static_cast<int>(i);
    IntMat M(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
        RElement dm = differential(RElement::monomial(*K_, dom[j].J, dom[j].I, 1));
        for (const auto& [m, c] : dm.terms()) {
            auto it = row.find(m.I);
            if (it == row.end()) throw InternalError("strand differential leaves the strand");
            M.at(it->second, static_cast<int>(j)) = c;
        }
    }
    return M;
}

std::vector<i64> Strand::coords(const RElement& x, int poly_size) const {
    const auto& b = basis(poly_size);
    std::map<VSet, size_t, bool (*)(VSet, VSet)> index(lex_less);
    for (size_t i = 0; i < b.size(); ++i) index[b[i].I] = i;
    std::vector<i64> v(b.size(), 0);
    for (const auto& [m, c] : x.terms()) {
        if ((m.J | m.I) != support_ || vcard(m.I) != poly_size)
            throw InternalError("Strand::coords: element outside the piece");
        v[index.at(m.I)] = c;
    }
    return v;
}

RElement Strand::element(int poly_size, const std::vector<i64>& v) const {
    const auto& b = basis(poly_size);
    if (v.size() != b.size()) throw InternalError("Strand::element length mismatch");
    RElement e(*K_);
    for (size_t i = 0; i < b.size(); ++i)
        if (v[i] != 0) e.add_term(b[i], v[i]);
    return e;
}

CohomologyPiece Strand::cohomology(int poly_size) const {
    IntMat prev = poly_size == 0 ? IntMat(static_cast<int>(basis(0).size()), 0)
                                 : differential_matrix(poly_size - 1);
    return CohomologyPiece(std::move(prev), differential_matrix(poly_size));
}

std::optional<RElement> Strand::solve_differential(const RElement& target, int target_poly_size) const {
    if (target.is_zero()) return RElement(*K_);
    std::vector<i64> rhs = coords(target, target_poly_size);
    auto x = solve_integer(differential_matrix(target_poly_size - 1), rhs);
    if (!x) return std::nullopt;
    return element(target_poly_size - 1, *x);
}

RElement cochain_to_r(const SimplicialComplex& K, const Cochain& c, VSet J) {
    RElement e(K);
    for (const auto& [L, coeff] : c.coeffs) {
        if ((L & ~J) != 0) throw ValidationError("cochain_to_r: cochain supported outside J");
        e.add_term({J & ~L, L}, checked_mul(coeff, epsilon_sign(L, J)));
    }
    return e;
}

Cochain r_to_cochain(const SimplicialComplex& sub, const RElement& x, const Multidegree& md) {
    if (sub.ground() != md.support) throw ValidationError("r_to_cochain: subcomplex ground must equal the support");
    Cochain c(sub, vcard(md.support) - md.p - 1);
    for (const auto& [m, coeff] : x.terms()) {
        if (!(m.multidegree() == md)) throw ValidationError("r_to_cochain: element not homogeneous of the given multidegree");
        c.add_term(m.I, checked_mul(coeff, epsilon_sign(m.I, md.support)));
    }
    return c;
}

AbelianGroup cohomology_of_R(const SimplicialComplex& K, const Multidegree& md) {
    if (md.p < 0 || md.p > vcard(md.support)) return {};
    Strand strand(K, md.support);
    return strand.cohomology(vcard(md.support) - md.p).group();
}

}  // namespace zk

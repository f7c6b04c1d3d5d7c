#include "friends/laurent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace friends {

void Laurent::trim() {
    size_t a = 0, b = c_.size();
    while (a < b && c_[a] == 0) ++a;
    while (b > a && c_[b - 1] == 0) --b;
    if (a == b) { c_.clear(); lo_ = 0; return; }
    if (a > 0 || b < c_.size()) {
        c_ = std::vector<Int>(c_.begin() + a, c_.begin() + b);
        lo_ += static_cast<int>(a);
    }
}

bool Laurent::isUnit() const {
    return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

Laurent& Laurent::operator+=(const Laurent& o) {
    if (o.zero()) return *this;
    if (zero()) { *this = o; return *this; }
    int nlo = std::min(lo_, o.lo_);
    int nhi = std::max(highExp(), o.highExp());
    std::vector<Int> nc(nhi - nlo + 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) nc[lo_ - nlo + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) nc[o.lo_ - nlo + i] += o.c_[i];
    lo_ = nlo;
    c_ = std::move(nc);
    trim();
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.zero() || b.zero()) return Laurent();
    Laurent r;
    r.lo_ = a.lo_ + b.lo_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

Int Laurent::evaluate(const Int& x) const {
    // Horner on the polynomial part; for lo_ < 0 only x = +-1 is supported.
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    if (lo_ >= 0) {
        for (int i = 0; i < lo_; ++i) acc *= x;
    } else {
        if (!(x == 1 || x == -1))
            throw std::invalid_argument("evaluate: negative exponent");
        if (x == -1 && (lo_ % 2 != 0)) acc = -acc;
    }
    return acc;
}

Laurent Laurent::mirrored() const {
    Laurent r;
    if (zero()) return r;
    r.c_ = std::vector<Int>(c_.rbegin(), c_.rend());
    r.lo_ = -highExp();
    return r;
}

Laurent Laurent::normalizedUnits() const {
    Laurent r = *this;
    if (r.zero()) return r;
    r.lo_ = 0;
    if (r.c_.back() < 0)
        for (auto& x : r.c_) x = -x;
    return r;
}

bool Laurent::palindromic() const {
    Laurent a = normalizedUnits();
    Laurent b = mirrored().normalizedUnits();
    return a == b;
}

std::string Laurent::str() const {
    if (zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        Int v = c_[i];
        int e = lo_ + i;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (v != 1 || e == 0) os << v.str();
        if (e != 0) {
            if (v != 1) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

Int intGcd(Int a, Int b) {
    a = abs(a); b = abs(b);
    while (b != 0) { Int t = a % b; a = b; b = t; }
    return a;
}

Int content(const Laurent& p) {
    Int g = 0;
    for (const Int& c : p.coeffs()) g = intGcd(g, c);
    return g;
}

Laurent scaleDown(const Laurent& p, const Int& d) {
    if (p.zero()) return p;
    Laurent r;
    std::vector<Int> cs;
    cs.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) cs.push_back(c / d);
    r = Laurent();
    for (size_t i = 0; i < cs.size(); ++i)
        r += Laurent::monomial(cs[i], p.lowExp() + static_cast<int>(i));
    return r;
}

// Pseudo-remainder of primitive polynomials (acting on t^0-based copies).
Laurent pseudoRem(Laurent f, const Laurent& g) {
    int dg = g.highExp() - g.lowExp();
    Int lcg = g.coeffs().back();
    while (!f.zero() && f.highExp() - f.lowExp() >= dg) {
        Int lcf = f.coeffs().back();
        // f = f*lcg - t^(df-dg) * lcf * g(shifted)
        Laurent shifted = Laurent::monomial(lcf, f.highExp() - g.highExp()) * g;
        Laurent nf;
        for (size_t i = 0; i < f.coeffs().size(); ++i)
            nf += Laurent::monomial(f.coeffs()[i] * lcg, f.lowExp() + static_cast<int>(i));
        f = nf - shifted;
    }
    return f;
}

}  // namespace

Laurent Laurent::gcd(Laurent a, Laurent b) {
    if (a.zero()) return b.normalizedUnits();
    if (b.zero()) return a.normalizedUnits();
    Int ca = content(a), cb = content(b);
    Int cg = intGcd(ca, cb);
    a = scaleDown(a, ca);
    b = scaleDown(b, cb);
    // primitive PRS
    while (true) {
        if (a.span() < b.span()) std::swap(a, b);
        Laurent r = pseudoRem(a, b);
        if (r.zero()) { a = b; break; }
        Int cr = content(r);
        a = b;
        b = scaleDown(r, cr);
    }
    Laurent g = a.normalizedUnits();
    Laurent scaled;
    for (size_t i = 0; i < g.coeffs().size(); ++i)
        scaled += Laurent::monomial(g.coeffs()[i] * cg, static_cast<int>(i));
    return scaled.normalizedUnits();
}

namespace {

using LMatrix = std::vector<std::vector<Laurent>>;

Laurent detCofactor(const LMatrix& m, std::vector<int>& cols, size_t row) {
    if (cols.empty()) return Laurent(Int(1));
    Laurent acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const Laurent& pivot = m[row][cols[k]];
        if (pivot.zero()) continue;
        int c = cols[k];
        cols.erase(cols.begin() + k);
        Laurent sub = detCofactor(m, cols, row + 1);
        cols.insert(cols.begin() + k, c);
        Laurent term = pivot * sub;
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

Laurent minorDet(const LMatrix& m, const std::vector<int>& rows,
                 const std::vector<int>& colsIn) {
    LMatrix sub(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        sub[i].reserve(colsIn.size());
        for (int c : colsIn) sub[i].push_back(m[rows[i]][c]);
    }
    std::vector<int> cols(colsIn.size());
    std::iota(cols.begin(), cols.end(), 0);
    return detCofactor(sub, cols, 0);
}

void forEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Laurent alexanderPolynomial(const GroupPresentation& p, const std::vector<Int>& phi) {
    const int n = p.gens;
    const int m = static_cast<int>(p.relators.size());
    if (n == 0) return Laurent(Int(1));
    if (m < n - 1) return Laurent();  // first elementary ideal vanishes

    auto expOf = [&](const Int& v) {
        // phi values fit in small ints for all our presentations
        return static_cast<int>(v);
    };

    // Fox Jacobian evaluated under abelianization.
    LMatrix J(m, std::vector<Laurent>(n));
    for (int r = 0; r < m; ++r) {
        Int pre = 0;  // exponent of phi(prefix)
        for (int x : p.relators[r]) {
            int g = std::abs(x) - 1;
            if (x > 0) {
                J[r][g] += Laurent::monomial(1, expOf(pre));
                pre += phi[g];
            } else {
                pre -= phi[g];
                J[r][g] -= Laurent::monomial(1, expOf(pre));
            }
        }
    }

    if (n == 1) {
        // E1 is generated by all entries (single column deleted leaves the
        // empty minor 1 only when m >= 0... for one generator the first
        // elementary ideal is the whole ring iff some relator is nonempty).
        return Laurent(Int(1));
    }

    long combos = 1;
    for (int i = 0; i < n - 1; ++i) {
        combos = combos * (m - i) / (i + 1);
        if (combos > 5000) throw std::runtime_error("alexander: presentation too large");
    }

    Laurent g;
    std::vector<int> allCols(n);
    std::iota(allCols.begin(), allCols.end(), 0);
    forEachSubset(m, n - 1, [&](const std::vector<int>& rows) {
        for (int drop = 0; drop < n; ++drop) {
            if (g.isUnit()) return;
            std::vector<int> cols;
            cols.reserve(n - 1);
            for (int c : allCols)
                if (c != drop) cols.push_back(c);
            Laurent d = minorDet(J, rows, cols);
            if (!d.zero()) g = Laurent::gcd(g, d);
        }
    });
    return g.normalizedUnits();
}

Laurent alexanderPolynomial(const GroupPresentation& p) {
    GroupPresentation s = simplifyPresentation(p);
    auto rel = abelianizedRelations(s);
    AbelianGroup ab = quotientByRows(s.gens, rel);
    if (!ab.isZ()) throw NotInfiniteCyclic();
    std::vector<Int> phi = cokernelZMap(s.gens, rel);
    if (phi.empty()) throw NotInfiniteCyclic();
    return alexanderPolynomial(s, phi);
}

}  // namespace friends

#include "skewtor/form.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skewtor {

std::vector<int> bladeIndices(Blade b) {
    std::vector<int> out;
    for (int i = 0; b; ++i, b >>= 1)
        if (b & 1u) out.push_back(i);
    return out;
}

Blade bladeOf(const std::vector<int>& idx) {
    Blade b = 0;
    for (int i : idx) {
        if (b & (1u << i)) throw std::invalid_argument("repeated index in blade");
        b |= 1u << i;
    }
    return b;
}

std::vector<Blade> bladesOfDegree(int n, int p) {
    std::vector<Blade> out;
    for (Blade b = 0; b < (1u << n); ++b)
        if (__builtin_popcount(b) == p) out.push_back(b);
    std::sort(out.begin(), out.end(), BladeOrder());
    return out;
}

int permutationSign(const std::vector<int>& idx) {
    int s = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) s = -s;
        }
    return s;
}

namespace {

// sign of e_A ^ e_B against e_{A|B} for disjoint masks
int wedgeSign(Blade a, Blade b) {
    int swaps = 0;
    for (int j = 0; b >> j; ++j)
        if (b & (1u << j)) swaps += __builtin_popcount(a >> (j + 1));
    return (swaps & 1) ? -1 : 1;
}

void checkDims(const Form& a, const Form& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("forms live in different dimensions: " + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()));
}

} // namespace

Form::Form(int dim) : n_(dim) {
    if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
}

Form Form::constant(int dim, const Rational& c) {
    Form f(dim);
    f.add(0, c);
    return f;
}

Form Form::e(int dim, std::initializer_list<int> idx, const Rational& c) {
    std::vector<int> z;
    for (int i : idx) z.push_back(i - 1);
    return eIdx(dim, z, c);
}

Form Form::eIdx(int dim, const std::vector<int>& idx0, const Rational& c) {
    Form f(dim);
    for (int i : idx0)
        if (i < 0 || i >= dim) throw std::invalid_argument("blade index out of range");
    int s = permutationSign(idx0);
    if (s != 0) f.add(bladeOf(idx0), c * s);
    return f;
}

Form Form::oneForm(const Vec& v) {
    Form f(static_cast<int>(v.size()));
    for (int i = 0; i < v.size(); ++i) f.add(1u << i, v(i));
    return f;
}

Form Form::volume(int dim) {
    Form f(dim);
    f.add((1u << dim) - 1, 1);
    return f;
}

int Form::degree() const {
    if (terms_.empty()) return -1;
    int p = __builtin_popcount(terms_.begin()->first);
    for (const auto& [b, c] : terms_)
        if (__builtin_popcount(b) != p) return -1;
    return p;
}

bool Form::isHomogeneous() const { return terms_.empty() || degree() >= 0; }

Form Form::part(int p) const {
    Form f(n_);
    for (const auto& [b, c] : terms_)
        if (__builtin_popcount(b) == p) f.terms_.emplace(b, c);
    return f;
}

std::vector<Form> Form::homogeneousParts() const {
    std::vector<Form> out;
    for (int p = 0; p <= n_; ++p) {
        Form f = part(p);
        if (!f.isZero()) out.push_back(std::move(f));
    }
    return out;
}

Rational Form::coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Form::at(const std::vector<int>& idx0) const {
    int s = permutationSign(idx0);
    if (s == 0) return 0;
    Rational c = coeff(bladeOf(idx0));
    return s > 0 ? c : -c;
}

Form& Form::add(Blade b, const Rational& c) {
    if (c.is_zero()) return *this;
    if (n_ < kMaxDim && (b >> n_) != 0) throw std::invalid_argument("blade outside the frame");
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

Form& Form::operator+=(const Form& o) {
    checkDims(*this, o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    checkDims(*this, o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

Form& Form::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
}

std::string Form::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (b == 0) {
            os << str(a);
            continue;
        }
        if (a != 1) os << str(a) << "*";
        bool firstIdx = true;
        for (int i : bladeIndices(b)) {
            os << (firstIdx ? "e" : "^e") << (i + 1);
            firstIdx = false;
        }
    }
    return os.str();
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator-(Form a) { return a *= Rational(-1); }
Form operator*(const Rational& s, Form a) { return a *= s; }
Form operator*(Form a, const Rational& s) { return a *= s; }

bool operator==(const Form& a, const Form& b) {
    return a.dim() == b.dim() && a.terms() == b.terms();
}

std::ostream& operator<<(std::ostream& os, const Form& a) { return os << a.toString(); }

Form wedge(const Form& a, const Form& b) {
    checkDims(a, b);
    Form out(a.dim());
    for (const auto& [ba, ca] : a.terms())
        for (const auto& [bb, cb] : b.terms()) {
            if (ba & bb) continue;
            Rational c = ca * cb;
            out.add(ba | bb, wedgeSign(ba, bb) > 0 ? c : -c);
        }
    return out;
}

Form interior(int i, const Form& a) {
    Form out(a.dim());
    const Blade bit = 1u << i;
    for (const auto& [b, c] : a.terms()) {
        if (!(b & bit)) continue;
        int below = __builtin_popcount(b & (bit - 1));
        out.add(b & ~bit, (below & 1) ? -c : c);
    }
    return out;
}

Form interior(const Vec& x, const Form& a) {
    if (x.size() != a.dim()) throw std::invalid_argument("vector and form dimensions differ");
    Form out(a.dim());
    for (int i = 0; i < x.size(); ++i)
        if (!x(i).is_zero()) out += x(i) * interior(i, a);
    return out;
}

Form hodge(const Form& a) {
    Form out(a.dim());
    const Blade full = (1u << a.dim()) - 1;
    for (const auto& [b, c] : a.terms()) {
        Blade comp = full & ~b;
        out.add(comp, wedgeSign(b, comp) > 0 ? c : -c);
    }
    return out;
}

Rational inner(const Form& a, const Form& b) {
    checkDims(a, b);
    Rational s = 0;
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = a.terms().size() <= b.terms().size() ? b : a;
    for (const auto& [bl, c] : small.terms()) {
        auto it = large.terms().find(bl);
        if (it != large.terms().end()) s += c * it->second;
    }
    return s;
}

Rational innerStrict(const Form& a, const Form& b) {
    if (!a.isZero() && !b.isZero() && a.degree() != b.degree())
        throw std::invalid_argument("inner product of forms of different degree");
    return inner(a, b);
}

Form sigmaT(const Form& t) {
    if (!t.isZero() && t.degree() != 3) throw std::invalid_argument("sigmaT needs a 3-form");
    Form out(t.dim());
    for (int i = 0; i < t.dim(); ++i) {
        Form c = interior(i, t);
        out += wedge(c, c);
    }
    return out *= Rational(1, 2);
}

Vec basisVector(int dim, int i) {
    Vec v = Vec::Zero(dim);
    v(i) = 1;
    return v;
}

Vec torsionVector(const Form& t, int i, int j) {
    Vec v(t.dim());
    for (int k = 0; k < t.dim(); ++k) v(k) = t.at(i, j, k);
    return v;
}

Form sigmaTQuadratic(const Form& t) {
    if (!t.isZero() && t.degree() != 3) throw std::invalid_argument("sigmaT needs a 3-form");
    const int n = t.dim();
    auto g = [&](int a, int b, int c, int d) { return torsionVector(t, a, b).dot(torsionVector(t, c, d)); };
    Form out(n);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                for (int v = z + 1; v < n; ++v)
                    out.add(bladeOf({x, y, z, v}), g(x, y, z, v) + g(y, z, x, v) + g(z, x, y, v));
    return out;
}

namespace {

Rational det(Mat m) {
    const Eigen::Index n = m.rows();
    Rational d = 1;
    for (Eigen::Index c = 0; c < n; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { p = r; break; }
        if (p < 0) return 0;
        if (p != c) {
            m.row(p).swap(m.row(c));
            d = -d;
        }
        d *= m(c, c);
        for (Eigen::Index r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Rational f = m(r, c) / m(c, c);
            for (Eigen::Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
        }
    }
    return d;
}

} // namespace

Rational evaluate(const Form& a, const std::vector<Vec>& vs) {
    const int p = static_cast<int>(vs.size());
    Rational total = 0;
    for (const auto& [b, c] : a.terms()) {
        if (__builtin_popcount(b) != p) continue;
        auto idx = bladeIndices(b);
        Mat m(p, p);
        for (int r = 0; r < p; ++r)
            for (int s = 0; s < p; ++s) m(r, s) = vs[r](idx[s]);
        total += c * det(m);
    }
    return total;
}

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}

Form parseForm(int dim, const std::string& s) {
    Form out(dim);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto readNumber = [&]() -> std::string {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == '/') {
            ++i;
            std::size_t ds = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (ds == i) throw ParseError("expected denominator", i);
        }
        return s.substr(start, i - start);
    };
    skip();
    if (i == s.size()) throw ParseError("empty expression", 0);
    bool firstTerm = true;
    while (true) {
        skip();
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!firstTerm) {
            throw ParseError("expected '+' or '-'", i);
        }
        firstTerm = false;
        Rational c = 1;
        bool haveCoeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t at = i;
            std::string num = readNumber();
            try {
                c = parseRational(num);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad coefficient '" + num + "'", at);
            }
            haveCoeff = true;
            skip();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip();
            } else {
                out.add(0, sign * c);
                skip();
                if (i == s.size()) break;
                continue;
            }
        }
        std::vector<int> idx;
        while (true) {
            if (i >= s.size() || s[i] != 'e')
                throw ParseError(haveCoeff ? "expected blade after '*'" : "expected a term", i);
            ++i;
            std::size_t ds = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                int k = s[i] - '0';
                if (k < 1 || k > dim) throw ParseError("index out of range", i);
                idx.push_back(k - 1);
                ++i;
            }
            if (ds == i) throw ParseError("expected index after 'e'", i);
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                continue;
            }
            break;
        }
        int ps = permutationSign(idx);
        if (ps == 0) throw ParseError("repeated index in blade", i);
        out.add(bladeOf(idx), ps * sign * c);
        skip();
        if (i == s.size()) break;
    }
    return out;
}

Form derive(const Mat& a, const Form& f) {
    const int n = f.dim();
    Form out(n);
    for (int j = 0; j < n; ++j) {
        Form c = interior(j, f);
        if (c.isZero()) continue;
        Vec row = a.row(j).transpose();
        out += wedge(Form::oneForm(row), c);
    }
    return out;
}

} // namespace skewtor

#include "smoothpatch/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace smoothpatch {

double binomial(int n, int j) {
    if (j < 0 || j > n) return 0.0;
    double b = 1.0;
    for (int i = 0; i < std::min(j, n - j); ++i) b = b * (n - i) / (i + 1);
    return b;
}

UnivariateSpace make_space(int p, int r, int k) {
    if (p < 1) throw std::invalid_argument("make_space: degree must be >= 1");
    if (k < 0) throw std::invalid_argument("make_space: negative breakpoint count");
    if (k > 0 && (r < 0 || r > p - 1))
        throw std::invalid_argument("make_space: regularity must satisfy 0 <= r <= p-1");

    UnivariateSpace s;
    s.p = p;
    s.r = k > 0 ? r : p;  // no interior knots, multiplicity pattern is vacuous
    s.k = k;
    s.h = 1.0 / (k + 1);
    s.knots.assign(p + 1, 0.0);
    for (int j = 1; j <= k; ++j) s.knots.insert(s.knots.end(), p - r, j * s.h);
    s.knots.insert(s.knots.end(), p + 1, 1.0);
    return s;
}

int span_of(const UnivariateSpace& s, double x) {
    int m = static_cast<int>(x * (s.k + 1));
    return std::clamp(m, 0, s.k);
}

LocalBasis eval_local(const UnivariateSpace& s, double x, int dmax) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("eval_local: point outside [0,1]");
    if (dmax < 0 || dmax > kMaxDerivative)
        throw std::invalid_argument("eval_local: unsupported derivative order");

    const int p = s.p;
    const std::vector<double>& T = s.knots;
    // Knot-vector index of the span start; x = 1 takes the left limit.
    const int m = x >= 1.0 ? s.k : span_of(s, x);
    const int i = p + m * (p - s.r);

    LocalBasis out;
    out.first = i - p;
    out.ders = Matrix::Zero(dmax + 1, p + 1);

    // Basis values and knot differences (triangular table), then derivatives
    // from the difference formula on the lower-degree values.
    Matrix ndu(p + 1, p + 1);
    std::vector<double> left(p + 1), right(p + 1);
    ndu(0, 0) = 1.0;
    for (int j = 1; j <= p; ++j) {
        left[j] = x - T[i + 1 - j];
        right[j] = T[i + j] - x;
        double saved = 0.0;
        for (int q = 0; q < j; ++q) {
            ndu(j, q) = right[q + 1] + left[j - q];
            double temp = ndu(q, j - 1) / ndu(j, q);
            ndu(q, j) = saved + right[q + 1] * temp;
            saved = left[j - q] * temp;
        }
        ndu(j, j) = saved;
    }
    for (int q = 0; q <= p; ++q) out.ders(0, q) = ndu(q, p);

    Matrix a(2, p + 1);
    for (int q = 0; q <= p; ++q) {
        int s1 = 0, s2 = 1;
        a(0, 0) = 1.0;
        for (int d = 1; d <= std::min(dmax, p); ++d) {
            double dv = 0.0;
            int rk = q - d, pk = p - d;
            if (q >= d) {
                a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
                dv = a(s2, 0) * ndu(rk, pk);
            }
            int j1 = rk >= -1 ? 1 : -rk;
            int j2 = q - 1 <= pk ? d - 1 : p - q;
            for (int j = j1; j <= j2; ++j) {
                a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
                dv += a(s2, j) * ndu(rk + j, pk);
            }
            if (q <= pk) {
                a(s2, d) = -a(s1, d - 1) / ndu(pk + 1, q);
                dv += a(s2, d) * ndu(q, pk);
            }
            out.ders(d, q) = dv;
            std::swap(s1, s2);
        }
    }
    double factor = p;
    for (int d = 1; d <= std::min(dmax, p); ++d) {
        for (int q = 0; q <= p; ++q) out.ders(d, q) *= factor;
        factor *= p - d;
    }
    return out;
}

Vector eval_basis(const UnivariateSpace& s, int d, double x) {
    Vector v = Vector::Zero(s.dim());
    LocalBasis lb = eval_local(s, x, d);
    for (int q = 0; q <= s.p; ++q) v(lb.first + q) = lb.ders(d, q);
    return v;
}

double eval_spline(const UnivariateSpace& s, const Vector& coeffs, int d, double x) {
    if (coeffs.size() != s.dim()) throw std::invalid_argument("eval_spline: coefficient size");
    LocalBasis lb = eval_local(s, x, d);
    double v = 0.0;
    for (int q = 0; q <= s.p; ++q) v += coeffs(lb.first + q) * lb.ders(d, q);
    return v;
}

namespace {

// Single knot insertion into an arbitrary knot vector with coefficients.
void boehm_insert(int p, std::vector<double>& T, std::vector<double>& c, double u) {
    int m = 0;
    for (int i = p; i + 1 < static_cast<int>(T.size()); ++i)
        if (T[i] <= u && u < T[i + 1]) m = i;
    std::vector<double> cn(c.size() + 1);
    for (int i = 0; i < static_cast<int>(cn.size()); ++i) {
        if (i <= m - p) {
            cn[i] = c[i];
        } else if (i > m) {
            cn[i] = c[i - 1];
        } else {
            double a = (u - T[i]) / (T[i + p] - T[i]);
            cn[i] = a * c[i] + (1.0 - a) * c[i - 1];
        }
    }
    c = std::move(cn);
    T.insert(T.begin() + m + 1, u);
}

// Multi-argument de Casteljau: blossom of the Bernstein polynomial `b` over
// [a0, a1] evaluated at args.
double blossom(Vector b, double a0, double a1, const std::vector<double>& args) {
    const int p = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(args.size()) != p) throw std::logic_error("blossom: argument count");
    for (int step = 0; step < p; ++step) {
        double t = (args[step] - a0) / (a1 - a0);
        for (int i = 0; i < p - step; ++i) b(i) = (1.0 - t) * b(i) + t * b(i + 1);
    }
    return b(0);
}

Vector elevate_bernstein(const Vector& a) {
    const int q = static_cast<int>(a.size()) - 1;
    Vector out(q + 2);
    out(0) = a(0);
    out(q + 1) = a(q);
    for (int m = 1; m <= q; ++m) {
        double t = static_cast<double>(m) / (q + 1);
        out(m) = t * a(m - 1) + (1.0 - t) * a(m);
    }
    return out;
}

}  // namespace

Matrix to_bezier(const UnivariateSpace& s, const Vector& coeffs) {
    if (coeffs.size() != s.dim()) throw std::invalid_argument("to_bezier: coefficient size");
    std::vector<double> T = s.knots;
    std::vector<double> c(coeffs.data(), coeffs.data() + coeffs.size());
    for (int j = 1; j <= s.k; ++j)
        for (int rep = 0; rep < s.r; ++rep) boehm_insert(s.p, T, c, j * s.h);

    Matrix bez(s.k + 1, s.p + 1);
    for (int m = 0; m <= s.k; ++m)
        for (int q = 0; q <= s.p; ++q) bez(m, q) = c[m * s.p + q];
    return bez;
}

Vector from_bezier(const UnivariateSpace& s, const Matrix& bez) {
    if (bez.rows() != s.k + 1 || bez.cols() != s.p + 1)
        throw std::invalid_argument("from_bezier: table shape");
    const int p = s.p;
    const std::vector<double>& T = s.knots;
    Vector c(s.dim());
    for (int j = 0; j < s.dim(); ++j) {
        // The coefficient is the blossom of any polynomial piece whose span
        // index lies in the coefficient's knot window; take the middle one.
        std::vector<int> spans;
        for (int q = j; q <= j + p; ++q)
            if (T[q + 1] > T[q]) spans.push_back(q);
        int q = spans[spans.size() / 2];
        int m = span_of(s, 0.5 * (T[q] + T[q + 1]));
        std::vector<double> args(T.begin() + j + 1, T.begin() + j + p + 1);
        c(j) = blossom(bez.row(m), m * s.h, (m + 1) * s.h, args);
    }
    return c;
}

std::pair<UnivariateSpace, Vector> derivative(const UnivariateSpace& s, const Vector& coeffs) {
    if (coeffs.size() != s.dim()) throw std::invalid_argument("derivative: coefficient size");
    if (s.p < 1 || (s.k > 0 && s.r < 1))
        throw std::invalid_argument("derivative: space is not differentiable into a spline space");
    UnivariateSpace ds = make_space(s.p - 1, s.k > 0 ? s.r - 1 : 0, s.k);
    Vector dc(ds.dim());
    for (int i = 0; i < dc.size(); ++i)
        dc(i) = s.p * (coeffs(i + 1) - coeffs(i)) / (s.knots[i + s.p + 1] - s.knots[i + 1]);
    return {ds, dc};
}

double BernsteinPoly::eval(double x) const {
    Vector b = coeffs;
    for (int step = 0; step < degree(); ++step)
        for (int i = 0; i < degree() - step; ++i) b(i) = (1.0 - x) * b(i) + x * b(i + 1);
    return b(0);
}

BernsteinPoly BernsteinPoly::constant(double c) { return {Vector::Constant(1, c)}; }

BernsteinPoly BernsteinPoly::linear(double v0, double v1) {
    Vector c(2);
    c << v0, v1;
    return {c};
}

BernsteinPoly BernsteinPoly::times(const BernsteinPoly& o) const {
    const int d1 = degree(), d2 = o.degree();
    Vector c = Vector::Zero(d1 + d2 + 1);
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
            c(i + j) += binomial(d1, i) * binomial(d2, j) / binomial(d1 + d2, i + j) * coeffs(i) *
                        o.coeffs(j);
    return {c};
}

BernsteinPoly BernsteinPoly::pow(int e) const {
    BernsteinPoly out = constant(1.0);
    for (int i = 0; i < e; ++i) out = out.times(*this);
    return out;
}

std::pair<UnivariateSpace, Vector> spline_multiply(const UnivariateSpace& s, const Vector& coeffs,
                                                   const BernsteinPoly& b, int max_degree) {
    const int d = b.degree();
    if (max_degree >= 0 && s.p + d > max_degree)
        throw std::runtime_error("spline_multiply: product degree " + std::to_string(s.p + d) +
                                 " exceeds cap " + std::to_string(max_degree));
    Matrix bez = to_bezier(s, coeffs);
    UnivariateSpace out = make_space(s.p + d, s.k > 0 ? s.r : 0, s.k);
    Matrix prod(s.k + 1, s.p + d + 1);
    for (int m = 0; m <= s.k; ++m) {
        // Bernstein coefficients of b restricted to span m, by blossoming.
        Vector bloc(d + 1);
        for (int i = 0; i <= d; ++i) {
            std::vector<double> args(d, m * s.h);
            std::fill(args.begin() + (d - i), args.end(), (m + 1) * s.h);
            bloc(i) = blossom(b.coeffs, 0.0, 1.0, args);
        }
        for (int q = 0; q <= s.p + d; ++q) {
            double v = 0.0;
            for (int i = std::max(0, q - d); i <= std::min(s.p, q); ++i)
                v += binomial(s.p, i) * binomial(d, q - i) / binomial(s.p + d, q) * bez(m, i) *
                     bloc(q - i);
            prod(m, q) = v;
        }
    }
    return {out, from_bezier(out, prod)};
}

Matrix representation_matrix(const UnivariateSpace& coarse, const UnivariateSpace& fine) {
    if (coarse.k != fine.k)
        throw std::invalid_argument("representation_matrix: breakpoint mismatch");
    if (coarse.p > fine.p || (coarse.k > 0 && coarse.r < fine.r))
        throw std::invalid_argument("representation_matrix: coarse space is not a subspace");

    Matrix mu(fine.dim(), coarse.dim());
    for (int i = 0; i < coarse.dim(); ++i) {
        Matrix bez = to_bezier(coarse, Vector::Unit(coarse.dim(), i));
        Matrix ele(coarse.k + 1, fine.p + 1);
        for (int m = 0; m <= coarse.k; ++m) {
            Vector row = bez.row(m);
            while (row.size() < fine.p + 1) row = elevate_bernstein(row);
            ele.row(m) = row;
        }
        mu.col(i) = from_bezier(fine, ele);
    }
    return mu;
}

Vector truncate(const UnivariateSpace& coarse, const UnivariateSpace& fine, int s, int i) {
    Matrix mu = representation_matrix(coarse, fine);
    Vector c = mu.col(i);
    const int n2 = fine.dim();
    for (int j = 0; j <= s; ++j) c(j) = 0.0;
    for (int j = n2 - s - 1; j < n2; ++j) c(j) = 0.0;
    return c;
}

int min_breakpoints(int s, int p1) { return std::max(2 * (s + 1) - p1, 2); }

void check_admissible(int s, int p1, int k) {
    if (s < 1) throw std::invalid_argument("smoothness order must be >= 1");
    if (p1 < s + 1 || p1 > 2 * s + 1)
        throw std::invalid_argument("interior degree must satisfy s+1 <= p1 <= 2s+1");
    if (k < min_breakpoints(s, p1))
        throw std::invalid_argument("mesh too coarse: need at least " +
                                    std::to_string(min_breakpoints(s, p1)) +
                                    " interior breakpoints, got " + std::to_string(k));
}

Vector MixedBasis1d::fine_coeffs(const Mixed1dFunction& f) const {
    switch (f.group) {
        case MixedGroup::S2:
            return Vector::Unit(fine.dim(), f.index);
        case MixedGroup::S1:
            return mu.col(f.index);
        case MixedGroup::S1bar: {
            Vector c = mu.col(f.index);
            const int n2 = fine.dim();
            for (int j = 0; j <= s; ++j) c(j) = 0.0;
            for (int j = n2 - s - 1; j < n2; ++j) c(j) = 0.0;
            return c;
        }
    }
    throw std::logic_error("fine_coeffs: bad group");
}

MixedBasis1d build_mixed_1d(int s, int p1, int k) {
    check_admissible(s, p1, k);
    MixedBasis1d b;
    b.s = s;
    b.p1 = p1;
    b.k = k;
    b.coarse = make_space(p1, p1 - 1, k);
    b.fine = make_space(2 * s + 1, s, k);
    b.mu = representation_matrix(b.coarse, b.fine);

    const int n1 = b.coarse.dim();
    const int n2 = b.fine.dim();
    for (int i = s + 1; i <= n1 - s - 2; ++i) b.functions.push_back({MixedGroup::S1, i});
    for (int i = 1; i <= s; ++i) b.functions.push_back({MixedGroup::S1bar, i});
    for (int i = n1 - s - 1; i <= n1 - 2; ++i) b.functions.push_back({MixedGroup::S1bar, i});
    for (int i = 0; i <= s; ++i) b.functions.push_back({MixedGroup::S2, i});
    for (int i = n2 - s - 1; i <= n2 - 1; ++i) b.functions.push_back({MixedGroup::S2, i});
    return b;
}

}  // namespace smoothpatch

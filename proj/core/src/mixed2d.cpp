#include "smoothpatch/mixed2d.hpp"

#include <stdexcept>

namespace smoothpatch {

namespace {

// Index bands of the coarse grid: outer = the 2s truncated indices next to the
// boundary, inner = the untouched middle.
std::vector<int> coarse_outer(int s, int n1) {
    std::vector<int> v;
    for (int i = 1; i <= s; ++i) v.push_back(i);
    for (int i = n1 - s - 1; i <= n1 - 2; ++i) v.push_back(i);
    return v;
}

std::vector<int> fine_outer(int s, int n2) {
    std::vector<int> v;
    for (int i = 0; i <= s; ++i) v.push_back(i);
    for (int i = n2 - s - 1; i <= n2 - 1; ++i) v.push_back(i);
    return v;
}

}  // namespace

MixedSpace2d build_mixed_2d(int s, int p1, int k) {
    MixedSpace2d m;
    m.s = s;
    m.p1 = p1;
    m.k = k;
    m.line = build_mixed_1d(s, p1, k);
    const int n1 = m.line.coarse.dim();
    const int n2 = m.line.fine.dim();

    for (int j1 = s + 1; j1 <= n1 - s - 2; ++j1)
        for (int j2 = s + 1; j2 <= n1 - s - 2; ++j2)
            m.functions.push_back({MixedGroup::S1, j1, j2});

    for (int j1 : coarse_outer(s, n1))
        for (int j2 = 1; j2 <= n1 - 2; ++j2) m.functions.push_back({MixedGroup::S1bar, j1, j2});
    for (int j1 = s + 1; j1 <= n1 - s - 2; ++j1)
        for (int j2 : coarse_outer(s, n1)) m.functions.push_back({MixedGroup::S1bar, j1, j2});

    for (int j1 : fine_outer(s, n2))
        for (int j2 = 0; j2 <= n2 - 1; ++j2) m.functions.push_back({MixedGroup::S2, j1, j2});
    for (int j1 = s + 1; j1 <= n2 - s - 2; ++j1)
        for (int j2 : fine_outer(s, n2)) m.functions.push_back({MixedGroup::S2, j1, j2});

    return m;
}

int mixed_dim_2d(int s, int p1, int k) {
    return 4 * (s + 1) * (s + 1) * (k + 1) + (k + s) * (k + s) +
           (p1 - (s + 1)) * (p1 + 2 * k + s - 1);
}

std::pair<Vector, Vector> MixedSpace2d::factor_coeffs(const MixedId2d& f) const {
    switch (f.group) {
        case MixedGroup::S1:
            return {line.mu.col(f.j1), line.mu.col(f.j2)};
        case MixedGroup::S1bar:
            // Truncation is the identity on interior indices, so applying it
            // to both factors is harmless and uniform.
            return {line.fine_coeffs({MixedGroup::S1bar, f.j1}),
                    line.fine_coeffs({MixedGroup::S1bar, f.j2})};
        case MixedGroup::S2:
            return {Vector::Unit(line.fine.dim(), f.j1), Vector::Unit(line.fine.dim(), f.j2)};
    }
    throw std::logic_error("factor_coeffs: bad group");
}

Vector MixedSpace2d::fine_coeffs(const MixedId2d& f) const {
    auto [c1, c2] = factor_coeffs(f);
    const int n2 = line.fine.dim();
    Vector out(n2 * n2);
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b) out(a * n2 + b) = c1(a) * c2(b);
    return out;
}

double MixedSpace2d::eval(const MixedId2d& f, int d1, int d2, double x1, double x2) const {
    auto [c1, c2] = factor_coeffs(f);
    return eval_spline(line.fine, c1, d1, x1) * eval_spline(line.fine, c2, d2, x2);
}

double MixedSpace2d::eval_combination(const Vector& coeffs, int d1, int d2, double x1,
                                      double x2) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("eval_combination: coefficient size");
    double v = 0.0;
    for (int i = 0; i < dim(); ++i)
        if (coeffs(i) != 0.0) v += coeffs(i) * eval(functions[i], d1, d2, x1, x2);
    return v;
}

int MixedSpace2d::count(MixedGroup g) const {
    int n = 0;
    for (const auto& f : functions) n += f.group == g;
    return n;
}

Vector project_into_mixed(const MixedSpace2d& m, const Vector& fine_tensor_coeffs) {
    if (fine_tensor_coeffs.size() != m.fine_dim())
        throw std::invalid_argument("project_into_mixed: coefficient size");
    Matrix F(m.fine_dim(), m.dim());
    for (int i = 0; i < m.dim(); ++i) F.col(i) = m.fine_coeffs(m.functions[i]);
    return weighted_lstsq(F, fine_tensor_coeffs, Vector::Ones(m.fine_dim()));
}

}  // namespace smoothpatch

#include "crmoser/forms.hpp"

#include <stdexcept>
#include <utility>

namespace crmoser {

std::string to_string(FormKind kind) {
    switch (kind) {
        case FormKind::Diagonal: return "diagonal";
        case FormKind::Antidiagonal: return "antidiagonal";
        case FormKind::Explicit: return "explicit";
    }
    return "explicit";
}

FormKind form_kind_from_string(const std::string& s) {
    if (s == "diagonal") return FormKind::Diagonal;
    if (s == "antidiagonal") return FormKind::Antidiagonal;
    if (s == "explicit") return FormKind::Explicit;
    throw std::invalid_argument("unknown form kind '" + s + "'");
}

Inertia hermitian_inertia(const CMatrix& h) {
    if (!h.is_square()) throw std::invalid_argument("inertia of a non-square matrix");
    const std::size_t n = h.rows();
    CMatrix a(h);
    Inertia in;

    auto row_add = [&](std::size_t dst, std::size_t src, const GaussianRational& f) {
        // congruence: row_dst += f row_src, col_dst += conj(f) col_src
        for (std::size_t c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
        GaussianRational fc = f.conj();
        for (std::size_t r = 0; r < n; ++r) a(r, dst) += fc * a(r, src);
    };
    auto swap_index = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t p = k; p < n; ++p)
            if (!a(p, p).is_zero()) {
                piv = p;
                break;
            }
        if (piv == n) {
            // zero diagonal: combine with an off-diagonal partner, q(e_p + c e_q) = 2|h_qp|^2
            for (std::size_t p = k; p < n && piv == n; ++p)
                for (std::size_t q = k; q < n; ++q)
                    if (q != p && !a(q, p).is_zero()) {
                        row_add(p, q, a(q, p).conj());
                        piv = p;
                        break;
                    }
        }
        if (piv == n) {
            in.zero = n - k;
            return in;
        }
        swap_index(k, piv);
        GaussianRational inv = a(k, k).inverse();
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a(j, k).is_zero()) continue;
            row_add(j, k, -(a(j, k) * inv));
        }
        if (sgn(a(k, k).re()) > 0) ++in.positive;
        else ++in.negative;
    }
    return in;
}

HermitianForm::HermitianForm(std::size_t m, CMatrix h, FormKind kind) : m_(m), kind_(kind), h_(std::move(h)) {
    if (!h_.is_square() || h_.rows() == 0) throw std::invalid_argument("Hermitian form must be a non-empty square matrix");
    if (h_.rows() > kMaxDim) throw std::invalid_argument("form dimension exceeds supported maximum");
    if (h_.transpose() != h_.conj()) throw std::invalid_argument("matrix is not Hermitian");
    if (2 * m_ > h_.rows()) throw std::invalid_argument("signature parameter must satisfy n >= 2m");
    Inertia in = hermitian_inertia(h_);
    if (in.zero != 0) throw std::invalid_argument("Hermitian form is degenerate");
    if (in.negative != m_ || in.positive != h_.rows() - m_)
        throw std::invalid_argument("Hermitian form signature (" + std::to_string(in.positive) + ", " +
                                    std::to_string(in.negative) + ") does not match (n-m, m)");
    h_inv_ = h_.inverse();
}

GaussianRational HermitianForm::pair(const CVector& x, const CVector& y) const {
    if (x.size() != n() || y.size() != n()) throw std::invalid_argument("form pairing dimension mismatch");
    GaussianRational s;
    for (std::size_t a = 0; a < n(); ++a)
        for (std::size_t b = 0; b < n(); ++b)
            if (!h_(a, b).is_zero()) s += h_(a, b) * x[a] * y[b].conj();
    return s;
}

HermitianForm standard_form(std::size_t n, std::size_t m, FormKind kind) {
    if (n == 0) throw std::invalid_argument("form dimension must be positive");
    if (2 * m > n) throw std::invalid_argument("standard form requires n >= 2m");
    CMatrix h(n, n);
    switch (kind) {
        case FormKind::Diagonal:
            for (std::size_t k = 0; k < n; ++k) h(k, k) = k < n - m ? 1 : -1;
            break;
        case FormKind::Antidiagonal:
            for (std::size_t k = 0; k < m; ++k) {
                h(k, n - 1 - k) = 1;
                h(n - 1 - k, k) = 1;
            }
            for (std::size_t k = m; k < n - m; ++k) h(k, k) = 1;
            break;
        case FormKind::Explicit:
            throw std::invalid_argument("explicit forms need a matrix");
    }
    return HermitianForm(m, std::move(h), kind);
}

RealPoly inner_poly(const HermitianForm& form) {
    const std::size_t n = form.n();
    Poly p(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (form.matrix()(a, b).is_zero()) continue;
            Monomial mono;
            mono.set_z(a, 1);
            mono.set_zbar(b, 1);
            p.add_term(mono, form.matrix()(a, b));
        }
    return RealPoly(std::move(p));
}

Poly inner_with_vector(const HermitianForm& form, const CVector& a) {
    const std::size_t n = form.n();
    if (a.size() != n) throw std::invalid_argument("vector dimension mismatch");
    Poly p(n);
    for (std::size_t r = 0; r < n; ++r) {
        GaussianRational c;
        for (std::size_t b = 0; b < n; ++b) c += form.matrix()(r, b) * a[b].conj();
        p += Poly::z(n, r) * c;
    }
    return p;
}

std::optional<int> is_pseudounitary(const CMatrix& u, const HermitianForm& form) {
    if (u.rows() != form.n() || u.cols() != form.n()) throw std::invalid_argument("is_pseudounitary: dimension mismatch");
    CMatrix g = u.transpose() * form.matrix() * u.conj();
    if (g == form.matrix()) return 1;
    if (g == -form.matrix()) return -1;
    return std::nullopt;
}

bool in_lie_algebra(const CMatrix& x, const HermitianForm& form) {
    if (x.rows() != form.n() || x.cols() != form.n()) return false;
    return (x.transpose() * form.matrix() + form.matrix() * x.conj()).is_zero();
}

LieElement::LieElement(CMatrix x, const HermitianForm& form) : x_(std::move(x)) {
    if (!in_lie_algebra(x_, form)) throw std::invalid_argument("matrix is not in u(H)");
}

std::vector<Rational> real_coordinates(const CMatrix& x) {
    std::vector<Rational> v;
    v.reserve(2 * x.rows() * x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) {
            v.push_back(x(r, c).re());
            v.push_back(x(r, c).im());
        }
    return v;
}

CMatrix from_real_coordinates(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != 2 * rows * cols) throw std::invalid_argument("coordinate vector length mismatch");
    CMatrix x(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t k = 2 * (r * cols + c);
            x(r, c) = GaussianRational(v[k], v[k + 1]);
        }
    return x;
}

std::vector<LieElement> u_basis(const HermitianForm& form) {
    const std::size_t n = form.n();
    const std::size_t unknowns = 2 * n * n;
    // Column j of the system is the image of the j-th real unit matrix under X -> X^T H + H conj(X).
    QMatrix system(2 * n * n, unknowns);
    for (std::size_t j = 0; j < unknowns; ++j) {
        std::vector<Rational> e(unknowns);
        e[j] = 1;
        CMatrix x = from_real_coordinates(e, n, n);
        auto image = real_coordinates(x.transpose() * form.matrix() + form.matrix() * x.conj());
        for (std::size_t i = 0; i < image.size(); ++i) system(i, j) = image[i];
    }
    std::vector<LieElement> basis;
    for (const auto& v : system.nullspace()) basis.emplace_back(from_real_coordinates(v, n, n), form);
    if (basis.size() != n * n) throw std::logic_error("u(H) nullspace has unexpected dimension");
    return basis;
}

CMatrix cayley(const CMatrix& x) {
    CMatrix e = CMatrix::identity(x.rows());
    return (e + x) * (e - x).inverse();
}

}  // namespace crmoser

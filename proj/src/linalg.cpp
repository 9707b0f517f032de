#include "hyperlat/linalg.hpp"

namespace hyperlat {

IntPoly char_poly(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("char_poly: non-square matrix");
    const std::size_t n = m.rows();

    // Faddeev-LeVerrier: M_0 = I, c_n = 1;
    //   c_{n-k} = -tr(A M_{k-1} A-step)/k, all divisions exact over Z.
    IntVector c(n + 1);
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = m * mk;
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        Int q, r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        if (r != 0) throw MalformedError("char_poly: inexact trace division");
        c[n - k] = -q;
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
    return IntPoly(std::move(c));
}

RatPoly char_poly_rat(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("char_poly: non-square matrix");
    const std::size_t n = m.rows();
    RatPoly c(n + 1);
    c[n] = Rat(1);
    RatMatrix mk = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix am = m * mk;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rat(static_cast<long>(k));
        mk = am;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
    return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rat inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void normalize_leading_one(RatVector& v) {
    for (const auto& x : v) {
        if (x != 0) {
            Rat inv = 1 / x;
            for (auto& y : v) y *= inv;
            return;
        }
    }
}

}  // namespace

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots = rref(a);

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RatVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVector v(m.cols(), Rat(0));
        v[free_col] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < free_col) v[pivots[r]] = -a(r, free_col);
        }
        normalize_leading_one(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

Signature signature_impl(RatMatrix s) {
    const std::size_t n = s.rows();
    Signature sig;

    auto swap_rowcol = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(s(i, k), s(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(s(k, i), s(k, j));
    };
    auto add_rowcol = [&](std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < n; ++k) s(dst, k) += s(src, k);
        for (std::size_t k = 0; k < n; ++k) s(k, dst) += s(k, src);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (s(i, i) == 0) {
            std::size_t j = i + 1;
            for (; j < n; ++j)
                if (s(j, j) != 0) break;
            if (j < n) {
                swap_rowcol(i, j);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (s(i, j) != 0) break;
                if (j == n) {
                    ++sig.n_zero;
                    continue;
                }
                add_rowcol(i, j);  // diagonal becomes 2*s(i,j) != 0
            }
        }
        const Rat d = s(i, i);
        if (d > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s(j, i) == 0) continue;
            Rat f = s(j, i) / d;
            for (std::size_t k = i; k < n; ++k) s(j, k) -= f * s(i, k);
            for (std::size_t k = i; k < n; ++k) s(k, j) -= f * s(k, i);
        }
    }
    return sig;
}

}  // namespace

Signature signature(const IntMatrix& gram) {
    if (!gram.is_symmetric()) throw ShapeError("signature: matrix not symmetric");
    return signature_impl(to_rat_matrix(gram));
}

Signature signature(const RatMatrix& gram) {
    if (!gram.is_symmetric()) throw ShapeError("signature: matrix not symmetric");
    return signature_impl(gram);
}

RatMatrix congruence_diagonalize(const RatMatrix& gram, RatVector& diag) {
    if (!gram.is_symmetric()) throw ShapeError("congruence_diagonalize: matrix not symmetric");
    const std::size_t n = gram.rows();
    RatMatrix s = gram;
    RatMatrix t = RatMatrix::identity(n);  // columns are the new basis vectors

    auto swap_rowcol = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(s(i, k), s(j, k));
        for (std::size_t k = 0; k < n; ++k) std::swap(s(k, i), s(k, j));
        for (std::size_t k = 0; k < n; ++k) std::swap(t(k, i), t(k, j));
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Rat& f) {
        // basis change b_dst += f * b_src, applied symmetrically to s
        for (std::size_t k = 0; k < n; ++k) s(dst, k) += f * s(src, k);
        for (std::size_t k = 0; k < n; ++k) s(k, dst) += f * s(k, src);
        for (std::size_t k = 0; k < n; ++k) t(k, dst) += f * t(k, src);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (s(i, i) == 0) {
            std::size_t j = i + 1;
            for (; j < n; ++j)
                if (s(j, j) != 0) break;
            if (j < n) {
                swap_rowcol(i, j);
            } else {
                for (j = i + 1; j < n; ++j)
                    if (s(i, j) != 0) break;
                if (j == n) continue;  // row already clear, diagonal stays 0
                add_col(i, j, Rat(1));
            }
        }
        const Rat d = s(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (s(j, i) == 0) continue;
            add_col(j, i, -s(j, i) / d);
        }
    }
    diag.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) diag[i] = s(i, i);
    return t;
}

Int det(const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("det: non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                Int q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (r != 0) throw MalformedError("det: Bareiss division not exact");
                a(i, j) = q;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Int d = a(n - 1, n - 1);
    return sign > 0 ? d : Int(-d);
}

Rat det(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("det: non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rat d(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            d = -d;
        }
        d *= a(k, k);
        Rat inv = 1 / a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return d;
}

RatMatrix rat_inverse(const RatMatrix& m) {
    if (!m.is_square()) throw ShapeError("inverse: non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw DomainError("inverse: singular matrix");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        Rat s = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= s;
            inv(k, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

IntMatrix int_inverse(const IntMatrix& m) {
    Int d = det(m);
    if (d != 1 && d != -1) throw NotUnimodularError("inverse requires det +-1");
    RatMatrix inv = rat_inverse(to_rat_matrix(m));
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (inv(i, j).get_den() != 1) throw MalformedError("integer inverse not integral");
            out(i, j) = inv(i, j).get_num();
        }
    return out;
}

IntMatrix mat_pow(const IntMatrix& m, long k) {
    if (!m.is_square()) throw ShapeError("mat_pow: non-square matrix");
    IntMatrix base = m;
    if (k < 0) {
        base = int_inverse(m);
        k = -k;
    }
    IntMatrix result = IntMatrix::identity(m.rows());
    unsigned long e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

IntMatrix poly_at_matrix(const IntPoly& p, const IntMatrix& m) {
    if (!m.is_square()) throw ShapeError("poly_at_matrix: non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix acc(n, n);
    if (p.is_zero()) return acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += p[static_cast<std::size_t>(i)];
    }
    return acc;
}

RatMatrix companion(const RatPoly& monic) {
    int d = rat_poly_degree(monic);
    if (d < 1) throw DomainError("companion: degree must be >= 1");
    if (monic[static_cast<std::size_t>(d)] != 1) throw DomainError("companion: polynomial not monic");
    RatMatrix c(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = Rat(1);
    for (int i = 0; i < d; ++i)
        c(static_cast<std::size_t>(i), static_cast<std::size_t>(d - 1)) = -monic[static_cast<std::size_t>(i)];
    return c;
}

RatMatrix kronecker_product(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace hyperlat

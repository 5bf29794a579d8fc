#include "equicoh/mackey.hpp"

#include <stdexcept>

namespace equicoh {

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("F2Matrix: product shape mismatch");
    F2Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (at(i, k))
                for (int j = 0; j < o.cols_; ++j)
                    r.set(i, j, r.at(i, j) ^ o.at(k, j));
    return r;
}

F2Matrix F2Matrix::operator+(const F2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("F2Matrix: sum shape mismatch");
    F2Matrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j) ^ o.at(i, j));
    return r;
}

MackeyFunctor MackeyFunctor::constant_z2() {
    MackeyFunctor M;
    M.dimTop = 1;
    M.dimBot = 1;
    M.tStar = F2Matrix::identity(1);
    M.iStar = F2Matrix::identity(1);
    M.iLower = F2Matrix(1, 1);  // transfer is zero
    return M;
}

MackeyFunctor MackeyFunctor::zero() {
    return MackeyFunctor{};
}

std::vector<std::string> check_mackey(const MackeyFunctor& M) {
    if (M.tStar.rows() != M.dimTop || M.tStar.cols() != M.dimTop ||
        M.iStar.rows() != M.dimBot || M.iStar.cols() != M.dimTop ||
        M.iLower.rows() != M.dimTop || M.iLower.cols() != M.dimBot)
        throw std::invalid_argument("check_mackey: matrix shapes inconsistent with dimTop/dimBot");

    std::vector<std::string> violations;
    const F2Matrix idTop = F2Matrix::identity(M.dimTop);

    if (M.tStar * M.tStar != idTop)
        violations.push_back("(t*)^2 = id");
    if (M.iStar * M.tStar != M.iStar)
        violations.push_back("t* i* = i*");
    // Over F2 with (t*)^2 = id the inverse of t* is t* itself.
    if (M.tStar * M.iLower != M.iLower)
        violations.push_back("i_* (t*)^{-1} = i_*");
    if (M.iLower * M.iStar != idTop + M.tStar)
        violations.push_back("i* i_* = id + t*");
    return violations;
}

}  // namespace equicoh

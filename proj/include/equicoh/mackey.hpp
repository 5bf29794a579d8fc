#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equicoh {

/* Dense matrix over F2.  Entries are addressed (row, col); composition of
 * maps is written in row-vector convention, x -> x*A, so (A then B) = A*B. */
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols) : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, 0) {}
    static F2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    uint8_t at(int r, int c) const { return bits_[static_cast<std::size_t>(r) * cols_ + c]; }
    void set(int r, int c, uint8_t v) { bits_[static_cast<std::size_t>(r) * cols_ + c] = v & 1; }

    F2Matrix operator*(const F2Matrix& o) const;
    F2Matrix operator+(const F2Matrix& o) const;

    friend auto operator<=>(const F2Matrix&, const F2Matrix&) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> bits_;
};

/* A Z/2-Mackey functor in matrix form.
 *
 * M(Z/2) has dimension dimTop and M(e) dimension dimBot.  tStar is the
 * Weyl action on M(Z/2); iStar is the restriction M(e) -> M(Z/2) stored as a
 * dimBot x dimTop matrix (row-vector convention); iLower is the transfer
 * M(Z/2) -> M(e), dimTop x dimBot.
 */
struct MackeyFunctor {
    int dimTop = 0;
    int dimBot = 0;
    F2Matrix tStar;   // dimTop x dimTop
    F2Matrix iStar;   // dimBot x dimTop
    F2Matrix iLower;  // dimTop x dimBot

    static MackeyFunctor constant_z2();  // the coefficient functor used throughout
    static MackeyFunctor zero();
};

/* Evaluates the four compatibility identities over F2 and returns the names
 * of the ones that fail (empty list = valid Mackey functor).  Throws
 * std::invalid_argument when matrix shapes disagree with dimTop/dimBot. */
std::vector<std::string> check_mackey(const MackeyFunctor& M);

}  // namespace equicoh

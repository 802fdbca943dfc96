#include "cq/nets/segre.hpp"

namespace cq {

const char* segre_name(SegreType t) {
  switch (t) {
    case SegreType::S111: return "[1,1,1]";
    case SegreType::S21: return "[2,1]";
    case SegreType::S3: return "[3]";
    case SegreType::S11_1: return "[(1,1),1]";
    case SegreType::S21_paren: return "[(2,1)]";
  }
  return "?";
}

int segre_singular_fibres(SegreType t) {
  switch (t) {
    case SegreType::S111: return 3;
    case SegreType::S21: return 2;
    case SegreType::S3: return 1;
    case SegreType::S11_1: return 2;
    case SegreType::S21_paren: return 1;
  }
  return 0;
}

int segre_double_lines(SegreType t) {
  return (t == SegreType::S11_1 || t == SegreType::S21_paren) ? 1 : 0;
}

SegreType segre_symbol(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != 3 || b.rows() != 3 || a.cols() != 3 || b.cols() != 3 || !a.is_symmetric() || !b.is_symmetric())
    fail(ErrorCode::InvalidInput, "pencil members must be symmetric 3x3 matrices");
  return segre_symbol_over(a, b);
}

}  // namespace cq

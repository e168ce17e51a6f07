#include "cremona/gizaction.hpp"

#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

namespace {

// Scales the triple so the first nonzero entry is 1.
void normalize(std::array<Matrix, 3>& a) {
  for (const auto& m : a)
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        if (!m(i, j).is_zero()) {
          if (m(i, j).is_one()) return;
          Scalar s = m(i, j).inverse();
          for (auto& x : a) x = x.scaled(s);
          return;
        }
  fail(ErrorCode::InvalidArgument, "all three matrices are zero");
}

}  // namespace

SymTriple::SymTriple(Matrix a1, Matrix a2, Matrix a3) : a_{std::move(a1), std::move(a2), std::move(a3)} {
  for (int i = 0; i < 3; ++i) {
    if (a_[i].size() != a_[0].size()) fail(ErrorCode::InvalidArgument, "matrices of different sizes");
    if (!(a_[i].field() == a_[0].field())) fail(ErrorCode::MixedFields, "matrices over different fields");
    if (!a_[i].is_symmetric()) fail(ErrorCode::InvalidArgument, "A" + std::to_string(i + 1) + " is not symmetric");
  }
  normalize(a_);
}

long giz_dim(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be positive");
  return static_cast<long>(n + 1) * (n + 2) / 2 - 1;
}

SymTriple giz_act_lin(const LinMap& g, const SymTriple& t) {
  if (!(g.field() == t.field())) fail(ErrorCode::MixedFields, "map and triple over different fields");
  const Mat3& m = g.matrix();
  std::array<Matrix, 3> out{Matrix(t.field(), t.n()), Matrix(t.field(), t.n()), Matrix(t.field(), t.n())};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) out[i] = out[i] + t[j].scaled(m(i, j));
  return SymTriple(out[0], out[1], out[2]);
}

SymTriple giz_act_sigma(const SymTriple& t) {
  std::array<Matrix, 3> out{t[0], t[1], t[2]};
  for (int i = 0; i < 3; ++i) {
    if (t[i].det().is_zero())
      fail(ErrorCode::SingularComponent, "A" + std::to_string(i + 1) + " is singular");
    out[i] = t[i].inverse();
  }
  return SymTriple(out[0], out[1], out[2]);
}

SymTriple giz_act_word(const Word& w, const SymTriple& t) {
  SymTriple cur = t;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (w[k].is_lin()) {
      cur = giz_act_lin(w[k].map(), cur);
      continue;
    }
    try {
      cur = giz_act_sigma(cur);
    } catch (const Error& e) {
      fail(ErrorCode::SingularComponent, "letter " + std::to_string(k) + ": " + e.what());
    }
  }
  return cur;
}

bool giz_check_rel5_identity(const Matrix& a1, const Matrix& a3) {
  if (a1.size() != a3.size()) fail(ErrorCode::InvalidArgument, "matrices of different sizes");
  auto invert = [](const Matrix& m, const char* name) {
    if (m.det().is_zero()) fail(ErrorCode::SingularInput, std::string(name) + " is singular");
    return m.inverse();
  };
  Matrix a1i = invert(a1, "A1");
  Matrix a3i = invert(a3, "A3");
  Matrix lhs = invert(a3i - a1i, "A3^-1 - A1^-1");
  Matrix rhs = a3 - a3 * invert(a3 - a1, "A3 - A1") * a3;
  return lhs == rhs;
}

bool giz_congruent_via(const SymTriple& a, const SymTriple& b, const Matrix& c) {
  if (c.size() != a.n() || a.n() != b.n()) return false;
  if (c.det().is_zero()) return false;
  Matrix ct = c.transpose();
  return SymTriple(c * a[0] * ct, c * a[1] * ct, c * a[2] * ct) == b;
}

SymTriple parse_triple(const Field& f, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
    }
    fail(ErrorCode::ParseError, "unexpected end of input after line " + std::to_string(lineno));
  };
  int n = 0;
  {
    std::istringstream ls(next_line());
    std::string extra;
    if (!(ls >> n) || n < 1 || (ls >> extra))
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected a positive size n");
  }
  std::array<Matrix, 3> m{Matrix(f, n), Matrix(f, n), Matrix(f, n)};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < n; ++i) {
      std::istringstream ls(next_line());
      std::string tok;
      int j = 0;
      while (ls >> tok) {
        if (j >= n) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": too many entries");
        try {
          m[k](i, j++) = f.parse_scalar(tok);
        } catch (const Error& e) {
          fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + e.what());
        }
      }
      if (j != n) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " entries");
    }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing input");
  }
  return SymTriple(m[0], m[1], m[2]);
}

std::string format_triple(const SymTriple& t) {
  std::string s = std::to_string(t.n()) + "\n";
  for (int k = 0; k < 3; ++k) {
    s += "\n";
    for (int i = 0; i < t.n(); ++i) {
      for (int j = 0; j < t.n(); ++j) {
        if (j) s += " ";
        s += t[k](i, j).to_string();
      }
      s += "\n";
    }
  }
  return s;
}

}  // namespace cremona

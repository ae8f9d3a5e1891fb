#include "jdt/molien.hpp"

#include <map>
#include <stdexcept>

#include "jdt/errors.hpp"

namespace jdt {

namespace {

unsigned common_conductor(const std::vector<Matrix2>& mats) {
  unsigned n = 1;
  for (const auto& m : mats)
    for (const Cyclo* e : {&m.a, &m.b, &m.c, &m.d}) n = lcm_u(n, e->conductor());
  return n;
}

// entries lifted to a fixed conductor, flattened; gives matrices a total
// order so closure dedup can use a std::map
std::vector<Rational> matrix_key(const Matrix2& m, unsigned conductor) {
  std::vector<Rational> key;
  for (const Cyclo* e : {&m.a, &m.b, &m.c, &m.d}) {
    Cyclo lifted = e->lifted(conductor);
    key.insert(key.end(), lifted.coeffs().begin(), lifted.coeffs().end());
  }
  return key;
}

}  // namespace

Matrix2 Matrix2::identity() {
  Matrix2 m;
  m.a = Cyclo::one();
  m.d = Cyclo::one();
  return m;
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r;
  r.a = a * o.a + b * o.c;
  r.b = a * o.b + b * o.d;
  r.c = c * o.a + d * o.c;
  r.d = c * o.b + d * o.d;
  return r;
}

bool Matrix2::operator==(const Matrix2& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::vector<Matrix2> group_closure(const std::vector<Matrix2>& generators, size_t bound) {
  if (generators.empty()) throw Error("no generators");
  for (const auto& g : generators)
    if (g.det().is_zero()) throw Error("singular generator");

  unsigned conductor = common_conductor(generators);
  std::map<std::vector<Rational>, size_t> seen;
  std::vector<Matrix2> elements;

  auto add = [&](const Matrix2& m) {
    auto [it, fresh] = seen.emplace(matrix_key(m, conductor), elements.size());
    if (fresh) elements.push_back(m);
    return fresh;
  };

  add(Matrix2::identity());
  for (size_t next = 0; next < elements.size(); ++next) {
    Matrix2 cur = elements[next];  // copy: elements may reallocate
    for (const auto& g : generators) {
      if (add(cur * g) && elements.size() > bound)
        throw Error("group closure exceeded " + std::to_string(bound) +
                    " elements; generators may not generate a finite group");
    }
  }
  return elements;
}

std::vector<Matrix2> named_group_generators(const std::string& name) {
  if (name == "identity") return {Matrix2::identity()};
  if (name == "g3") {
    Cyclo s = Cyclo::sqrt3_inverse();
    Matrix2 m1;
    m1.a = s;
    m1.b = s * Cyclo::rational(Rational(2));
    m1.c = s;
    m1.d = -s;
    Matrix2 m2;
    m2.a = Cyclo::one();
    m2.d = Cyclo::root_of_unity(3, 1);
    return {m1, m2};
  }
  if (name == "g4") {
    Matrix2 m1;
    m1.a = Cyclo::rational(Rational(1, 2));
    m1.b = Cyclo::rational(Rational(3, 2));
    m1.c = Cyclo::rational(Rational(1, 2));
    m1.d = Cyclo::rational(Rational(-1, 2));
    Matrix2 m2;
    m2.a = Cyclo::one();
    m2.d = Cyclo::rational(Rational(-1));
    return {m1, m2};
  }
  throw Error("unknown group: " + name + " (expected g3, g4 or identity)");
}

std::vector<std::string> named_group_list() { return {"g3", "g4", "identity"}; }

MolienTable::MolienTable(unsigned max_degree) : max_degree_(max_degree) {
  cells_.assign((static_cast<size_t>(max_degree) + 1) * (max_degree + 2) / 2, Int(0));
}

namespace {
size_t cell_index(unsigned D, unsigned i, unsigned j) {
  if (i + j > D) throw Error("degree exceeds the table");
  // row i starts after rows 0..i-1 of lengths D+1, D, ...
  size_t offset = static_cast<size_t>(i) * (D + 1) - static_cast<size_t>(i) * (i - 1) / 2;
  return offset + j;
}
}  // namespace

const Int& MolienTable::coeff(unsigned i, unsigned j) const {
  return cells_[cell_index(max_degree_, i, j)];
}

Int& MolienTable::coeff_mut(unsigned i, unsigned j) {
  return cells_[cell_index(max_degree_, i, j)];
}

SparsePoly MolienTable::homogeneous_part(unsigned d) const {
  if (d > max_degree_) throw Error("degree exceeds the table");
  SparsePoly p(1);
  for (unsigned i = 0; i <= d; ++i) {
    const Int& c = coeff(i, d - i);
    if (c != 0) p.add_term({static_cast<int>(i), static_cast<int>(d - i)}, Rational(c));
  }
  return p;
}

std::string MolienTable::csv() const {
  std::string out = "i,j,coefficient\n";
  for (unsigned i = 0; i <= max_degree_; ++i)
    for (unsigned j = 0; i + j <= max_degree_; ++j)
      out += std::to_string(i) + "," + std::to_string(j) + "," + coeff(i, j).str() + "\n";
  return out;
}

MolienTable molien_bivariate(const std::vector<Matrix2>& group, unsigned max_degree) {
  if (group.empty()) throw Error("empty group");
  unsigned D = max_degree;

  // accumulate sum over g of a_i(g) a_j(g) with exact cyclotomic arithmetic
  std::vector<Cyclo> acc((static_cast<size_t>(D) + 1) * (D + 2) / 2);
  for (const auto& g : group) {
    Cyclo tau = g.trace();
    Cyclo delta = g.det();
    std::vector<Cyclo> a(D + 1);
    a[0] = Cyclo::one();
    if (D >= 1) a[1] = tau;
    for (unsigned m = 2; m <= D; ++m) a[m] = tau * a[m - 1] - delta * a[m - 2];
    for (unsigned i = 0; i <= D; ++i)
      for (unsigned j = 0; i + j <= D; ++j) acc[cell_index(D, i, j)] += a[i] * a[j];
  }

  MolienTable table(D);
  Rational order(static_cast<long long>(group.size()));
  for (unsigned i = 0; i <= D; ++i) {
    for (unsigned j = 0; i + j <= D; ++j) {
      const Cyclo& sum = acc[cell_index(D, i, j)];
      if (!sum.is_rational())
        throw IntegralityError("averaged series coefficient is not rational at u^" +
                               std::to_string(i) + " v^" + std::to_string(j));
      Rational value = sum.rational_part() / order;
      if (!is_integer(value))
        throw IntegralityError("averaged series coefficient is not integral at u^" +
                               std::to_string(i) + " v^" + std::to_string(j));
      table.coeff_mut(i, j) = to_int(value);
    }
  }
  return table;
}

bool verify_denominator(const MolienTable& table, const std::vector<Int>& d_u,
                        const std::vector<Int>& d_v) {
  auto degree_of = [](const std::vector<Int>& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    if (d < 0) throw Error("zero denominator polynomial");
    return d;
  };
  int deg_u = degree_of(d_u);
  int deg_v = degree_of(d_v);
  unsigned D = table.max_degree();

  for (unsigned i = 0; i <= D; ++i) {
    for (unsigned j = 0; i + j <= D; ++j) {
      if (static_cast<int>(i) <= deg_u - 2 && static_cast<int>(j) <= deg_v - 2) continue;
      Int prod = 0;
      for (int x = 0; x <= deg_u && x <= static_cast<int>(i); ++x) {
        if (d_u[x] == 0) continue;
        for (int y = 0; y <= deg_v && y <= static_cast<int>(j); ++y) {
          if (d_v[y] == 0) continue;
          prod += d_u[x] * d_v[y] * table.coeff(i - x, j - y);
        }
      }
      if (prod != 0) return false;
    }
  }
  return true;
}

}  // namespace jdt

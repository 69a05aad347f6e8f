#include "motivic/motivic_class.hpp"

#include <climits>

#include "motivic/parse.hpp"

namespace motivic {

GeneratorTable::GeneratorTable(std::vector<GeneratorEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.name.empty()) throw DomainError("generator with empty name");
    if (e.name == "L") throw DomainError("'L' is reserved for the Lefschetz class");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].name == e.name) throw DomainError("duplicate generator '" + e.name + "'");
    }
    if (e.dimension < 0) throw DomainError("generator '" + e.name + "' has negative dimension");
    if (e.poincare.degree() != 2 * e.dimension) {
      throw DomainError("generator '" + e.name + "': Poincare polynomial must have degree 2*dimension");
    }
    // (u,v) -> (-t,-t) sends (-1)^(p+q) h^{p,q} u^p v^q to h^{p,q} t^(p+q).
    if (e.hodge_deligne.specialize_diagonal(-1) != e.poincare) {
      throw DomainError("generator '" + e.name + "': Hodge-Deligne polynomial does not specialize to the Poincare polynomial");
    }
    if (e.effective && !e.point_count) {
      throw DomainError("generator '" + e.name + "' is marked effective but has no point count");
    }
  }
}

const GeneratorEntry* GeneratorTable::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

GeneratorEntry GeneratorTable::genus_curve(std::string name, int genus) {
  if (genus < 0) throw DomainError("negative genus");
  GeneratorEntry e;
  e.name = std::move(name);
  e.dimension = 1;
  e.poincare = UniPoly::dense({1, 2 * genus, 1});
  e.hodge_deligne = BiPoly(1) - BiPoly::monomial(1, 0, genus) - BiPoly::monomial(0, 1, genus) +
                    BiPoly::monomial(1, 1);
  return e;
}

TablePtr standard_odp_table() {
  static const TablePtr table =
      std::make_shared<const GeneratorTable>(std::vector{GeneratorTable::genus_curve("V", 4)});
  return table;
}

int ClassMonomial::generator_count() const {
  int n = 0;
  for (const auto& [g, k] : generators) n += k;
  return n;
}

bool operator<(const ClassMonomial& a, const ClassMonomial& b) {
  int ca = a.generator_count(), cb = b.generator_count();
  if (ca != cb) return ca < cb;
  if (a.generators != b.generators) return a.generators < b.generators;
  return a.lefschetz < b.lefschetz;
}

MotivicClass MotivicClass::integer(const Integer& n) {
  MotivicClass c;
  c.add_term({}, n);
  return c;
}

MotivicClass MotivicClass::lefschetz(int power, const Integer& coeff) {
  if (power < 0) throw DomainError("negative power of L");
  MotivicClass c;
  c.add_term({power, {}}, coeff);
  return c;
}

MotivicClass MotivicClass::generator(std::string name, TablePtr table) {
  if (name.empty() || name == "L") throw DomainError("invalid generator name '" + name + "'");
  MotivicClass c(std::move(table));
  c.add_term({0, {{std::move(name), 1}}}, 1);
  return c;
}

MotivicClass MotivicClass::from_lefschetz_poly(const UniPoly& p, TablePtr table) {
  MotivicClass c(std::move(table));
  for (const auto& [e, k] : p.terms()) c.add_term({e, {}}, to_integer(k));
  return c;
}

MotivicClass MotivicClass::with_table(TablePtr table) const {
  MotivicClass c = *this;
  c.table_ = std::move(table);
  return c;
}

bool MotivicClass::is_pure_lefschetz() const {
  for (const auto& [m, c] : terms_) {
    if (!m.generators.empty()) return false;
  }
  return true;
}

std::set<std::string> MotivicClass::generators_used() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [g, k] : m.generators) out.insert(g);
  }
  return out;
}

Integer MotivicClass::coeff(int lefschetz_power, const std::map<std::string, int>& generators) const {
  auto it = terms_.find(ClassMonomial{lefschetz_power, generators});
  return it == terms_.end() ? Integer(0) : it->second;
}

UniPoly MotivicClass::lefschetz_polynomial() const {
  if (!is_pure_lefschetz()) {
    throw UnsupportedError("class " + to_string() + " involves symbolic generators; not a polynomial in L");
  }
  UniPoly p;
  for (const auto& [m, c] : terms_) p.add_term(m.lefschetz, Rational(c));
  return p;
}

MotivicClass& MotivicClass::add_term(const ClassMonomial& m, const Integer& c) {
  if (c == 0) return *this;
  if (m.lefschetz < 0) throw DomainError("negative power of L");
  for (const auto& [g, k] : m.generators) {
    if (k <= 0) throw DomainError("generator multiplicity must be positive");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

void MotivicClass::adopt_table(const MotivicClass& o) {
  if (!o.table_ || o.table_ == table_) return;
  if (table_) throw AlignmentError("classes refer to different generator tables");
  table_ = o.table_;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& o) {
  adopt_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& o) {
  adopt_table(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MotivicClass operator-(const MotivicClass& a) {
  MotivicClass r(a.table_);
  for (const auto& [m, c] : a.terms_) r.add_term(m, -c);
  return r;
}

MotivicClass operator*(const MotivicClass& a, const MotivicClass& b) {
  MotivicClass r(a.table_);
  r.adopt_table(b);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ClassMonomial m{ma.lefschetz + mb.lefschetz, ma.generators};
      for (const auto& [g, k] : mb.generators) m.generators[g] += k;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

MotivicClass operator*(const Integer& s, const MotivicClass& a) {
  MotivicClass r(a.table_);
  for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
  return r;
}

MotivicClass MotivicClass::substitute_generator(const std::string& name, const MotivicClass& image) const {
  MotivicClass r(table_);
  for (const auto& [m, c] : terms_) {
    ClassMonomial rest = m;
    int k = 0;
    if (auto it = rest.generators.find(name); it != rest.generators.end()) {
      k = it->second;
      rest.generators.erase(it);
    }
    MotivicClass piece(table_);
    piece.add_term(rest, c);
    for (int i = 0; i < k; ++i) piece = piece * image;
    r += piece;
  }
  return r;
}

MotivicClass MotivicClass::divide_by_lefschetz(int k) const {
  MotivicClass r(table_);
  for (const auto& [m, c] : terms_) {
    if (m.lefschetz < k) {
      MotivicClass single(table_);
      single.add_term(m, c);
      throw DivisibilityError(single.to_string(),
                              "class " + to_string() + " is not divisible by L^" + std::to_string(k) +
                                  ": term " + single.to_string());
    }
    r.add_term({m.lefschetz - k, m.generators}, c);
  }
  return r;
}

std::string MotivicClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (m.lefschetz > 0) mono = m.lefschetz == 1 ? "L" : "L^" + std::to_string(m.lefschetz);
    for (const auto& [g, k] : m.generators) {
      if (!mono.empty()) mono += '*';
      mono += "[" + g + "]";
      if (k != 1) mono += '^' + std::to_string(k);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

MotivicClass parse_class(std::string_view text, TablePtr table) {
  MultiPoly p = parse_poly(text);
  const auto& vars = p.variables();
  std::vector<std::string> names(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const std::string& v = vars[i];
    if (v == "L") continue;
    if (v.size() < 3 || v.front() != '[' || v.back() != ']') {
      throw ParseError("unknown symbol '" + v + "' in class '" + std::string(text) +
                       "' (use L and bracketed generators like [V])");
    }
    names[i] = v.substr(1, v.size() - 2);
    if (names[i] == "L") throw ParseError("'[L]' is not a generator; write L");
    if (table && !table->contains(names[i])) {
      throw ParseError("generator [" + names[i] + "] is not declared in the generator table");
    }
  }
  MotivicClass c(std::move(table));
  for (const auto& [e, k] : p.terms()) {
    if (!is_integer(k)) throw ParseError("class coefficients must be integers, got " + motivic::to_string(k));
    ClassMonomial m;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (e.powers[i] == 0) continue;
      if (vars[i] == "L") {
        m.lefschetz = e.powers[i];
      } else {
        m.generators[names[i]] = e.powers[i];
      }
    }
    c.add_term(m, k.get_num());
  }
  return c;
}

std::vector<MotivicClass> kapranov_zeta(const MotivicClass& c, int n) {
  if (n < 0) throw DomainError("kapranov_zeta: negative order");
  if (!c.is_pure_lefschetz()) {
    throw UnsupportedError("symmetric powers of " + c.to_string() +
                           " are not computed at class level because it involves symbolic generators; "
                           "use the measure-level formula 1/2 (p^2 + p(t^2)) instead");
  }
  const std::vector<std::string> vars{"L", "s"};
  MultiPoly zeta = MultiPoly::constant(vars, 1);
  for (const auto& [m, ck] : c.terms()) {
    if (!ck.fits_slong_p()) throw ScaleGuardError("kapranov_zeta: coefficient too large");
    MultiPoly factor = MultiPoly::constant(vars, 1) - MultiPoly::monomial(vars, {m.lefschetz, 1});
    zeta = truncated_product(zeta, series_binomial(factor, -ck.get_si(), n, "s"), "s", n);
  }
  std::vector<MotivicClass> out;
  for (int i = 1; i <= n; ++i) {
    MultiPoly layer = zeta.coefficient_in("s", i);
    out.push_back(MotivicClass::from_lefschetz_poly(to_uni(layer, "L"), c.table()));
  }
  return out;
}

MotivicClass symmetric_power(const MotivicClass& c, int n) {
  if (n == 0) return MotivicClass::integer(1).with_table(c.table());
  return kapranov_zeta(c, n).back();
}

MotivicClass symmetric_power_by_convolution(const MotivicClass& c, int n) {
  if (n < 0) throw DomainError("negative symmetric power");
  if (!c.is_pure_lefschetz()) throw UnsupportedError("convolution formula needs a pure-L class");
  // layers[j] = [(partial sum)^(j)] for j = 0..n
  std::vector<MotivicClass> layers(n + 1);
  layers[0] = MotivicClass::integer(1);
  for (const auto& [m, ck] : c.terms()) {
    if (ck < 0) throw DomainError("convolution formula needs non-negative coefficients");
    // (ck * L^k)^(j) = C(ck + j - 1, j) L^{kj}
    std::vector<MotivicClass> cell(n + 1);
    for (int j = 0; j <= n; ++j) {
      Integer count;
      mpz_bin_ui(count.get_mpz_t(), Integer(ck + j - 1).get_mpz_t(), static_cast<unsigned long>(j));
      if (j == 0) count = 1;
      cell[j] = MotivicClass::lefschetz(m.lefschetz * j, count);
    }
    std::vector<MotivicClass> next(n + 1);
    for (int total = 0; total <= n; ++total) {
      for (int j = 0; j <= total; ++j) next[total] += layers[total - j] * cell[j];
    }
    layers = std::move(next);
  }
  return layers[n].with_table(c.table());
}

MotivicClass hilb2_from_sym2(const MotivicClass& y, const MotivicClass& y_sym2, int m) {
  if (m < 0) throw DomainError("hilb2_from_sym2: dimension must be >= 0");
  if (m == 0) return y_sym2;
  return y_sym2 + (projective_space_class(m - 1) - MotivicClass::integer(1)) * y;
}

MotivicClass hilb2_from_sym2(const MotivicClass& y, int m) {
  if (m < 0) throw DomainError("hilb2_from_sym2: dimension must be >= 0");
  return hilb2_from_sym2(y, symmetric_power(y, 2), m);
}

MotivicClass projective_space_class(int m) {
  if (m < 0) throw DomainError("projective space of negative dimension");
  MotivicClass c;
  for (int i = 0; i <= m; ++i) c.add_term({i, {}}, 1);
  return c;
}

MotivicClass quadric_class(int m) {
  if (m < 1) throw DomainError("quadric_class needs m >= 1");
  MotivicClass c = projective_space_class(m - 1);
  if (m % 2 == 1) c += MotivicClass::lefschetz((m - 1) / 2);
  return c;
}

namespace {

void require_curve_v(const TablePtr& table) {
  const GeneratorEntry* v = table ? table->find("V") : nullptr;
  if (!v) throw DomainError("generator table does not declare V");
  if (v->dimension != 1) throw DomainError("generator V must have dimension 1");
}

}  // namespace

MotivicClass odp_cubic_threefold_blowup_expression(const TablePtr& table) {
  require_curve_v(table);
  MotivicClass v = MotivicClass::generator("V", table);
  return projective_space_class(3) +
         MotivicClass::lefschetz() * (v - projective_space_class(1) - MotivicClass::integer(1));
}

MotivicClass odp_cubic_threefold_class(const TablePtr& table) {
  require_curve_v(table);
  // Bl_p Y = Y - pt + P^1 x P^1 and Bl_V P^3 = P^3 + L[V].
  MotivicClass exceptional = projective_space_class(1) * projective_space_class(1);
  MotivicClass y = projective_space_class(3) + MotivicClass::lefschetz() * MotivicClass::generator("V", table) +
                   MotivicClass::integer(1) - exceptional;
  return y.with_table(table);
}

}  // namespace motivic

#include "qweyl/weyl/families.hpp"

#include <stdexcept>

namespace qweyl::weyl {

namespace {

std::string idx(int i) { return std::to_string(i); }

std::vector<std::string> names(const std::string& stem, int first, int last) {
  std::vector<std::string> r;
  for (int i = first; i <= last; ++i) r.push_back(stem + idx(i));
  return r;
}

int central_pos(const SystemPtr& sys, const CartanData& c, int i) {
  return sys->noncommuting_count() + (i - c.first);
}

Expr a_letter(const SystemPtr& sys, const CartanData& c, int i, int power = 1) {
  return generator(sys, central_pos(sys, c, i), power);
}

void check_node(const CartanData& c, int i) {
  if (i < c.first || i >= c.first + c.rank())
    throw std::out_of_range("node " + idx(i) + " is not in " + c.label);
}

int mod(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

SystemPtr classical_a_system(int l) {
  std::vector<std::vector<int>> c(l + 1, std::vector<int>(l + 1, 0));
  return GeneratorSystem::make(names("f", 0, l), c, names("a", 0, l));
}

SystemPtr quantum_a_system(int l) {
  if (l < 2) throw std::invalid_argument("A_l^(1) tables need l >= 2");
  const int n = l + 1;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][(i + 1) % n] = -1;
    c[(i + 1) % n][i] = 1;
  }
  return GeneratorSystem::make(names("F", 0, l), c, names("a", 0, l));
}

SystemPtr rank2_system(Family f) {
  int k = f == Family::B2 ? 2 : f == Family::G2 ? 3 : 0;
  if (!k) throw std::invalid_argument("rank-two systems exist for B2 and G2 only");
  return GeneratorSystem::make({"F1", "F2"}, {{0, -k}, {k, 0}}, {"a1", "a2"});
}

SystemPtr d5_system() { return GeneratorSystem::make({"F", "G"}, {{0, 1}, {-1, 0}}, names("a", 0, 5)); }

Endomorphism cartan_reflection(const SystemPtr& sys, const CartanData& c, int i) {
  check_node(c, i);
  Endomorphism e = Endomorphism::identity(sys);
  e.name = "s" + idx(i);
  for (int j = c.first; j < c.first + c.rank(); ++j)
    e.images[central_pos(sys, c, j)] = a_letter(sys, c, i, -c.aij(i, j)) * a_letter(sys, c, j);
  e.images[central_pos(sys, c, i)] = a_letter(sys, c, i, -1);
  return e;
}

Endomorphism classical_kny(const SystemPtr& sys, const CartanData& c, int i) {
  Endomorphism e = cartan_reflection(sys, c, i);
  Expr ai = a_letter(sys, c, i), fi = generator(sys, i - c.first);
  Expr ratio = (ai + fi) / (1 + ai * fi);
  for (int j = c.first; j < c.first + c.rank(); ++j) {
    int u = c.uij(i, j);
    if (u) e.images[j - c.first] = generator(sys, j - c.first) * pow(ratio, u);
  }
  return e;
}

Endomorphism quantum_A(const SystemPtr& sys, int l, int i) {
  CartanData c = cartan_A(l);
  Endomorphism e = cartan_reflection(sys, c, i);
  const int n = l + 1;
  Expr ai = a_letter(sys, c, i), fi = generator(sys, i);
  int prev = mod(i - 1, n), next = mod(i + 1, n);
  e.images[prev] = (1 + ai * fi) * inv(ai + fi) * generator(sys, prev);
  e.images[next] = generator(sys, next) * (ai + fi) * inv(1 + ai * fi);
  return e;
}

Endomorphism omega_A(const SystemPtr& sys, int l, int power) {
  const int n = l + 1;
  Endomorphism e = Endomorphism::identity(sys);
  e.name = power == 1 ? "w" : power == -1 ? "w^-1" : "w^" + idx(power);
  for (int i = 0; i < n; ++i) {
    e.images[i] = generator(sys, mod(i + power, n));
    e.images[n + i] = generator(sys, n + mod(i + power, n));
  }
  return e;
}

Expr psi_adjoint_image(const SystemPtr& sys, int x, int m, int d, const Expr& z) {
  const int c = sys->c(x, m);
  if (c % d != 0) throw AlgebraError("conjugation exponent is not a multiple of the base");
  const int k = -c / d;
  Expr mm = generator(sys, m);
  std::vector<Expr> f{generator(sys, x)};
  if (k < 0) {
    for (int j = 0; j < -k; ++j) {
      Expr mj = qpower(sys, -static_cast<long>(d) * j) * mm;
      f.push_back((z + mj) * inv(1 + z * mj));
    }
  } else {
    for (int j = 1; j <= k; ++j) {
      Expr mj = qpower(sys, static_cast<long>(d) * j) * mm;
      f.push_back((1 + z * mj) * inv(z + mj));
    }
  }
  return Expr::prod(f);
}

Endomorphism quantum_rank2(const SystemPtr& sys, Family f, int i) {
  CartanData c = f == Family::B2 ? cartan_B2() : f == Family::G2 ? cartan_G2() : throw std::invalid_argument("B2 or G2");
  Endomorphism e = cartan_reflection(sys, c, i);
  const int d = i == 1 ? 1 : (f == Family::B2 ? 2 : 3);
  Expr z = a_letter(sys, c, i, d);
  const int other = i == 1 ? 1 : 0;
  e.images[other] = psi_adjoint_image(sys, other, i - 1, d, z);
  return e;
}

Endomorphism d5_generator(const SystemPtr& sys, int i) {
  CartanData c = cartan_D5();
  Endomorphism e = cartan_reflection(sys, c, i);
  if (i == 2) e.images[0] = parse_expression("F*(a0*a1^-1*G + a2^2)*(a0*a1^-1*a2^2*G + 1)^-1", sys);
  if (i == 3) e.images[1] = parse_expression("(a3^2*a4*a5^-1*F + 1)*(a4*a5^-1*F + a3^2)^-1*G", sys);
  return e;
}

Endomorphism d5_diagram(const SystemPtr& sys, const std::string& name) {
  if (name == "sigma") {
    Endomorphism r = compose(d5_diagram(sys, "sigma01"), d5_diagram(sys, "sigma45"));
    r.name = "sigma";
    return r;
  }
  Endomorphism e = Endomorphism::identity(sys);
  e.anti = true;
  e.name = name;
  auto a = [&](int j, int p) { return generator(sys, 2 + j, p); };
  for (int j = 0; j < 6; ++j) e.images[2 + j] = a(j, -1);
  if (name == "sigma01") {
    e.images[0] = parse_expression("q^-1*F^-1", sys);
    e.images[2] = a(1, -1);
    e.images[3] = a(0, -1);
  } else if (name == "sigma45") {
    e.images[1] = parse_expression("q^-1*G^-1", sys);
    e.images[6] = a(5, -1);
    e.images[7] = a(4, -1);
  } else if (name == "tau") {
    e.images[0] = generator(sys, 1);
    e.images[1] = generator(sys, 0);
    for (int j = 0; j < 6; ++j) e.images[2 + j] = a(5 - j, -1);
  } else {
    throw std::invalid_argument("unknown diagram map '" + name + "'");
  }
  return e;
}

std::vector<Expr> ActionFamily::probes() const {
  std::vector<Expr> r;
  for (int i = 0; i < sys->size(); ++i) r.push_back(generator(sys, i));
  return r;
}

const Endomorphism& ActionFamily::letter(const std::string& n) const {
  auto it = letters.find(n);
  if (it == letters.end()) throw std::invalid_argument("unknown letter '" + n + "' for " + name);
  return it->second;
}

namespace {

void add(ActionFamily& f, Endomorphism e, const std::string& inverse) {
  std::string n = e.name;
  f.letters.emplace(n, std::move(e));
  f.inverse_of[n] = inverse;
}

std::string product(const std::string& stem, int l) {
  std::string s;
  for (int i = 0; i <= l; ++i) s += (i ? "*" : "") + stem + idx(i);
  return s;
}

void add_translations(ActionFamily& f, int l) {
  // T_k = s_k ... s_l w^-1 s_1 ... s_{k-1}
  for (int k = 1; k <= l; ++k) {
    std::vector<std::string> w, wi;
    for (int i = k; i <= l; ++i) w.push_back("s" + idx(i));
    w.push_back("w^-1");
    for (int i = 1; i < k; ++i) w.push_back("s" + idx(i));
    for (auto it = w.rbegin(); it != w.rend(); ++it) wi.push_back(f.inverse_of.at(*it));
    f.macros["t" + idx(k)] = w;
    f.macros["t" + idx(k) + "^-1"] = wi;
  }
}

}  // namespace

ActionFamily classical_a_family(int l) {
  ActionFamily f;
  f.name = "a" + idx(l) + "-classical";
  f.cartan = cartan_A(l);
  f.sys = classical_a_system(l);
  for (int i = 0; i <= l; ++i) add(f, classical_kny(f.sys, f.cartan, i), "s" + idx(i));
  add(f, omega_A(f.sys, l, 1), "w^-1");
  add(f, omega_A(f.sys, l, -1), "w");
  add_translations(f, l);
  f.aliases.insert_or_assign("p", parse_expression(product("a", l), f.sys));
  f.aliases.insert_or_assign("c", parse_expression(product("f", l), f.sys));
  return f;
}

ActionFamily quantum_a_family(int l) {
  ActionFamily f;
  f.name = "a" + idx(l);
  f.cartan = cartan_A(l);
  f.sys = quantum_a_system(l);
  for (int i = 0; i <= l; ++i) add(f, quantum_A(f.sys, l, i), "s" + idx(i));
  add(f, omega_A(f.sys, l, 1), "w^-1");
  add(f, omega_A(f.sys, l, -1), "w");
  add_translations(f, l);
  f.aliases.insert_or_assign("p", parse_expression(product("a", l), f.sys));
  f.aliases.insert_or_assign("c", parse_expression(product("F", l), f.sys));
  return f;
}

ActionFamily rank2_family(Family fam) {
  ActionFamily f;
  f.name = fam == Family::B2 ? "b2" : "g2";
  f.cartan = fam == Family::B2 ? cartan_B2() : cartan_G2();
  f.sys = rank2_system(fam);
  for (int i = 1; i <= 2; ++i) add(f, quantum_rank2(f.sys, fam, i), "s" + idx(i));
  return f;
}

ActionFamily d5_family() {
  ActionFamily f;
  f.name = "d5";
  f.cartan = cartan_D5();
  f.sys = d5_system();
  for (int i = 0; i <= 5; ++i) add(f, d5_generator(f.sys, i), "s" + idx(i));
  for (const char* n : {"sigma01", "sigma45", "tau", "sigma"}) add(f, d5_diagram(f.sys, n), n);
  f.macros["t3"] = {"s2", "s1", "s0", "s2", "sigma01", "s3", "s4", "s5", "s3", "sigma45"};
  f.macros["t3^-1"] = {"sigma45", "s3", "s5", "s4", "s3", "sigma01", "s2", "s0", "s1", "s2"};
  f.aliases.insert_or_assign("p", parse_expression("a0*a1*a2^2*a3^2*a4*a5", f.sys));
  f.aliases.insert_or_assign("t", parse_expression("a3^2*a4*a5", f.sys));
  return f;
}

ActionFamily family_by_name(const std::string& name) {
  if (name == "b2") return rank2_family(Family::B2);
  if (name == "g2") return rank2_family(Family::G2);
  if (name == "d5") return d5_family();
  if (name.size() >= 2 && name[0] == 'a') {
    std::size_t pos = 0;
    int l = 0;
    try {
      l = std::stoi(name.substr(1), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    std::string rest = pos ? name.substr(1 + pos) : "x";
    if (pos && l >= 2 && l <= 6) {
      if (rest.empty()) return quantum_a_family(l);
      if (rest == "-classical") return classical_a_family(l);
    }
  }
  throw std::invalid_argument("unknown group '" + name + "'");
}

}  // namespace qweyl::weyl

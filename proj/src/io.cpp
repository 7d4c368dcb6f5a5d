#include "ealax/io.hpp"

#include <sstream>

namespace ealax {

namespace {

std::string int_str(const Int& n) { return n.get_str(); }

std::string pow_factor(const char* base, const Int& e) {
  if (e == 0) return "";
  return std::string(base) + "^" + int_str(e);
}

std::string join_factors(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += "*";
    out += p;
  }
  return out;
}

std::string gsym_str(const FiniteLie* g, int sym_id) {
  if (!g) return "v#" + std::to_string(sym_id);
  GSym s = g->sym_from_id(sym_id);
  if (!s.root) return "h[" + std::to_string(s.idx + 1) + "]";
  std::string out = "x[";
  const auto& coords = g->rs().root(s.idx);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + "]";
}

std::string cgen_str(const Key& k, const KeyContext& ctx) {
  switch ((CGen)k.a) {
    case CGen::GLoop: return join_factors({pow_factor("t1", k.e0), gsym_str(ctx.g, k.b)});
    case CGen::GK1: return "k1";
    case CGen::GD1: return "d1";
    case CGen::GKn: return "K{" + int_str(k.e0) + "}";
    case CGen::GDn: return "D{" + int_str(k.e0) + "}";
  }
  return "?";
}

std::string wrap_gen(const std::string& gen) {
  return gen.find('*') == std::string::npos ? gen : "(" + gen + ")";
}

}  // namespace

std::string key_str(const Key& k, const KeyContext& ctx) {
  switch (k.kind) {
    case Kind::LoopRoot:
    case Kind::LoopCoroot: {
      int sym = k.kind == Kind::LoopRoot
                    ? k.a
                    : (ctx.g ? ctx.g->rs().nroots() + k.a : k.a);
      std::string s = join_factors(
          {pow_factor("t0", k.e0), pow_factor("t1", k.e1),
           k.kind == Kind::LoopRoot ? gsym_str(ctx.g, k.a) : "h[" + std::to_string(k.a + 1) + "]"});
      (void)sym;
      return s;
    }
    case Kind::K0: return "k0";
    case Kind::KLine: return join_factors({pow_factor("t0", k.e0), "k1"});
    case Kind::KPair: return "k_{" + int_str(k.e0) + "," + int_str(k.e1) + "}";
    case Kind::D0: return "d0";
    case Kind::DLine: return join_factors({pow_factor("t0", k.e0), "d1"});
    case Kind::DTilde: return "d~_{" + int_str(k.e0) + "," + int_str(k.e1) + "}";
    case Kind::DHatT0: return "t0^-1*d0";
    case Kind::DHat: return "d^_{" + int_str(k.e0) + "," + int_str(k.e1) + "}";
    case Kind::RawK:
      return "raw(k" + std::to_string(k.a) + ";" + int_str(k.e0) + "," + int_str(k.e1) + ")";
    case Kind::RawD:
      return "raw(d" + std::to_string(k.a) + ";" + int_str(k.e0) + "," + int_str(k.e1) + ")";
    case Kind::QtE:
      return join_factors({"E{" + std::to_string(k.a) + "," + std::to_string(k.b) + "}",
                           pow_factor("t0", k.e0), pow_factor("t1", k.e1)});
    case Kind::QtH: return "H{" + std::to_string(k.a) + "}";
    case Kind::QtK0: return "k0";
    case Kind::QtK1: return "k1";
    case Kind::QtD0: return "d0";
    case Kind::QtD1: return "d1";
    case Kind::InfE: return "E{" + int_str(k.e0) + "," + int_str(k.e1) + "}";
    case Kind::InfH: return "H{" + int_str(k.e0) + "}";
    case Kind::InfK: return "k";
    case Kind::TInfE:
      return join_factors(
          {pow_factor("t", k.e0), "E{" + int_str(k.e1) + "," + int_str(k.e2) + "}"});
    case Kind::TInfH:
      return join_factors({pow_factor("t", k.e0), "H{" + int_str(k.e1) + "}"});
    case Kind::CovE:
      return join_factors(
          {pow_factor("t", k.e0), "E~{" + int_str(k.e1) + "," + int_str(k.e2) + "}"});
    case Kind::CovH:
      return join_factors({pow_factor("t", k.e0), "H~{" + int_str(k.e1) + "}"});
    case Kind::CovK: return "k~";
    case Kind::CovAff: {
      std::string inner = join_factors({pow_factor("t", k.e0), gsym_str(ctx.g, k.a)});
      return "(" + inner + ")~";
    }
    case Kind::CovAffK: return "k~";
    case Kind::CgGen: {
      std::string gen = cgen_str(k, ctx);
      if (k.e1 == 0) return gen;
      return join_factors({"del^" + int_str(k.e1), wrap_gen(gen)});
    }
    case Kind::CgK0: return "k0";
    case Kind::CHatGen: return wrap_gen(cgen_str(k, ctx)) + "(" + int_str(k.e1) + ")";
    case Kind::CHatK0: return "k0(-1)";
    case Kind::CTildeGen: return wrap_gen(cgen_str(k, ctx)) + "[" + int_str(k.e1) + "]";
    case Kind::CTildeK0: return "k0[0]";
    case Kind::CTildeD: return "d";
  }
  return "?";
}

std::string elem_str(const SparseVec& v, const KeyContext& ctx) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : v.terms()) {
    if (!first) os << " + ";
    first = false;
    if (t.second.is_one()) {
      os << key_str(t.first, ctx);
    } else {
      std::string c = t.second.str();
      bool simple = c.find('+') == std::string::npos && c.find(' ') == std::string::npos;
      os << (simple ? c : "(" + c + ")") << "*" << key_str(t.first, ctx);
    }
  }
  return os.str();
}

namespace {

// split at top-level '*' respecting (), {}, []
std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == '*' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw Error("key parse: empty integer");
  return Int(s);
}

std::vector<Int> parse_int_list(const std::string& body) {
  std::vector<Int> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(parse_int(cur));
      cur.clear();
    } else if (!isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(parse_int(cur));
  return out;
}

struct FactorAcc {
  Int t0{0}, t1{0}, t{0};
  bool have_sym = false;
  Key sym;  // partially built
};

int root_sym_id(const FiniteLie* g, const std::vector<Int>& coords) {
  if (!g) throw Error("key parse: root coordinates need an algebra context");
  std::vector<int> c;
  for (const Int& x : coords) c.push_back((int)to_long(x));
  int rid = g->rs().root_id(c);
  if (rid < 0) throw Error("key parse: not a root");
  return rid;
}

}  // namespace

Key parse_key(const std::string& raw, const KeyContext& ctx) {
  std::string s;
  for (char c : raw)
    if (!isspace((unsigned char)c)) s += c;
  if (s.empty()) throw Error("key parse: empty input");

  // conformal wrappers: GEN(m) or GEN[m] with GEN possibly parenthesized
  if ((ctx.domain == Domain::CHat || ctx.domain == Domain::CTilde)) {
    if (s == "d" && ctx.domain == Domain::CTilde) return Key::simple(Kind::CTildeD);
    if (s == "k0(-1)" && ctx.domain == Domain::CHat) return Key::simple(Kind::CHatK0);
    if (s == "k0[0]" && ctx.domain == Domain::CTilde) return Key::simple(Kind::CTildeK0);
    char open = ctx.domain == Domain::CHat ? '(' : '[';
    char close = ctx.domain == Domain::CHat ? ')' : ']';
    size_t pos = s.rfind(open);
    if (pos == std::string::npos || s.back() != close)
      throw Error("key parse: conformal key needs a degree suffix");
    Int m = parse_int(s.substr(pos + 1, s.size() - pos - 2));
    std::string genpart = s.substr(0, pos);
    if (genpart.size() >= 2 && genpart.front() == '(' && genpart.back() == ')')
      genpart = genpart.substr(1, genpart.size() - 2);
    KeyContext inner = ctx;
    inner.domain = Domain::CgElem;
    Key gen = parse_key(genpart, inner);
    if (gen.kind != Kind::CgGen || gen.e1 != 0)
      throw Error("key parse: not a bare conformal generator");
    return Key(ctx.domain == Domain::CHat ? Kind::CHatGen : Kind::CTildeGen, gen.a, gen.b,
               gen.e0, m, 0);
  }

  FactorAcc acc;
  auto set_sym = [&](Key k) {
    if (acc.have_sym) throw Error("key parse: two symbols in one key");
    acc.have_sym = true;
    acc.sym = std::move(k);
  };

  for (const std::string& f : split_factors(s)) {
    if (f.empty()) throw Error("key parse: empty factor");
    if (f.rfind("t0", 0) == 0 && (f.size() == 2 || f[2] == '^')) {
      acc.t0 += f.size() == 2 ? Int(1) : parse_int(f.substr(3));
      continue;
    }
    if (f.rfind("t1", 0) == 0 && (f.size() == 2 || f[2] == '^')) {
      acc.t1 += f.size() == 2 ? Int(1) : parse_int(f.substr(3));
      continue;
    }
    if (f[0] == 't' && (f.size() == 1 || f[1] == '^')) {
      acc.t += f.size() == 1 ? Int(1) : parse_int(f.substr(2));
      continue;
    }
    if (f[0] == 'x' && f.size() > 2 && f[1] == '[') {
      set_sym(Key(Kind::LoopRoot, root_sym_id(ctx.g, parse_int_list(f.substr(2, f.size() - 3))),
                  0, 0, 0, 0));
      continue;
    }
    if (f[0] == 'h' && f.size() > 2 && f[1] == '[') {
      Int i = parse_int(f.substr(2, f.size() - 3));
      set_sym(Key(Kind::LoopCoroot, (int)to_long(i) - 1, 0, 0, 0, 0));
      continue;
    }
    if (f.rfind("k_{", 0) == 0 && f.back() == '}') {
      auto v = parse_int_list(f.substr(3, f.size() - 4));
      if (v.size() != 2) throw Error("key parse: k_{m,n} needs two indices");
      set_sym(Key(Kind::KPair, 0, 0, v[0], v[1], 0));
      continue;
    }
    if (f.rfind("d~_{", 0) == 0 && f.back() == '}') {
      auto v = parse_int_list(f.substr(4, f.size() - 5));
      if (v.size() != 2) throw Error("key parse: d~_{m,n} needs two indices");
      set_sym(Key(Kind::DTilde, 0, 0, v[0], v[1], 0));
      continue;
    }
    if (f.rfind("d^_{", 0) == 0 && f.back() == '}') {
      auto v = parse_int_list(f.substr(4, f.size() - 5));
      if (v.size() != 2) throw Error("key parse: d^_{n,m} needs two indices");
      set_sym(Key(Kind::DHat, 0, 0, v[0], v[1], 0));
      continue;
    }
    if (f.rfind("E~{", 0) == 0 && f.back() == '}') {
      auto v = parse_int_list(f.substr(3, f.size() - 4));
      if (v.size() != 2) throw Error("key parse: E~{r,s} needs two indices");
      set_sym(Key(Kind::CovE, 0, 0, 0, v[0], v[1]));
      continue;
    }
    if (f.rfind("H~{", 0) == 0 && f.back() == '}') {
      Int r = parse_int(f.substr(3, f.size() - 4));
      set_sym(Key(Kind::CovH, 0, 0, 0, r, 0));
      continue;
    }
    if (f.rfind("E{", 0) == 0 && f.back() == '}') {
      auto v = parse_int_list(f.substr(2, f.size() - 3));
      if (v.size() != 2) throw Error("key parse: E{i,j} needs two indices");
      if (ctx.domain == Domain::Qt)
        set_sym(Key(Kind::QtE, (int)to_long(v[0]), (int)to_long(v[1]), 0, 0, 0));
      else
        set_sym(Key(Kind::InfE, 0, 0, v[0], v[1], 0));
      continue;
    }
    if (f.size() == 3 && f[0] == 'E' && isdigit((unsigned char)f[1]) &&
        isdigit((unsigned char)f[2]) && ctx.domain == Domain::Qt) {
      set_sym(Key(Kind::QtE, f[1] - '0', f[2] - '0', 0, 0, 0));
      continue;
    }
    if (f.rfind("H{", 0) == 0 && f.back() == '}') {
      Int r = parse_int(f.substr(2, f.size() - 3));
      if (ctx.domain == Domain::Qt)
        set_sym(Key(Kind::QtH, (int)to_long(r), 0, 0, 0, 0));
      else
        set_sym(Key(Kind::InfH, 0, 0, r, 0, 0));
      continue;
    }
    if (f.rfind("K{", 0) == 0 && f.back() == '}') {
      set_sym(Key(Kind::CgGen, (int)CGen::GKn, 0, parse_int(f.substr(2, f.size() - 3)), 0, 0));
      continue;
    }
    if (f.rfind("D{", 0) == 0 && f.back() == '}') {
      set_sym(Key(Kind::CgGen, (int)CGen::GDn, 0, parse_int(f.substr(2, f.size() - 3)), 0, 0));
      continue;
    }
    if (f == "k0") {
      set_sym(ctx.domain == Domain::Qt ? Key::simple(Kind::QtK0) : Key::simple(Kind::K0));
      continue;
    }
    if (f == "k1") {
      if (ctx.domain == Domain::Qt)
        set_sym(Key::simple(Kind::QtK1));
      else if (ctx.domain == Domain::CgElem)
        set_sym(Key(Kind::CgGen, (int)CGen::GK1, 0, 0, 0, 0));
      else
        set_sym(Key(Kind::KLine, 0, 0, 0, 0, 0));
      continue;
    }
    if (f == "d0") {
      set_sym(ctx.domain == Domain::Qt ? Key::simple(Kind::QtD0) : Key::simple(Kind::D0));
      continue;
    }
    if (f == "d1") {
      if (ctx.domain == Domain::Qt)
        set_sym(Key::simple(Kind::QtD1));
      else if (ctx.domain == Domain::CgElem)
        set_sym(Key(Kind::CgGen, (int)CGen::GD1, 0, 0, 0, 0));
      else
        set_sym(Key(Kind::DLine, 0, 0, 0, 0, 0));
      continue;
    }
    if (f == "k" && ctx.domain == Domain::SlInf) {
      set_sym(Key::simple(Kind::InfK));
      continue;
    }
    if (f == "k~") {
      set_sym(Key::simple(ctx.domain == Domain::CovAff ? Kind::CovAffK : Kind::CovK));
      continue;
    }
    throw Error("key parse: unknown factor '" + f + "'");
  }

  if (!acc.have_sym) {
    // pure torus monomials name central lines
    if (acc.t1 == 0 && ctx.domain != Domain::Qt)
      throw Error("key parse: no basis symbol in key");
    throw Error("key parse: no basis symbol in key");
  }
  Key k = acc.sym;
  switch (k.kind) {
    case Kind::LoopRoot:
    case Kind::LoopCoroot:
      if (ctx.domain == Domain::CgElem) {
        if (k.kind == Kind::LoopCoroot) k = Key(Kind::LoopCoroot, k.a, 0, 0, 0, 0);
        int sym = k.kind == Kind::LoopRoot ? k.a : ctx.g->rs().nroots() + k.a;
        if (acc.t0 != 0) throw Error("key parse: conformal generators carry t1 only");
        return Key(Kind::CgGen, (int)CGen::GLoop, sym, acc.t1, 0, 0);
      }
      k.e0 = acc.t0;
      k.e1 = acc.t1;
      return k;
    case Kind::KLine:
    case Kind::DLine:
      k.e0 = acc.t0;
      if (acc.t1 != 0) throw Error("key parse: t1 power on a central/derivation line");
      return k;
    case Kind::K0:
    case Kind::D0:
      if (acc.t0 == -1 && k.kind == Kind::D0) return Key::simple(Kind::DHatT0);
      if (acc.t0 != 0 || acc.t1 != 0) throw Error("key parse: unexpected torus power");
      return k;
    case Kind::KPair:
    case Kind::DTilde:
    case Kind::DHat:
      if (acc.t0 != 0 || acc.t1 != 0) throw Error("key parse: unexpected torus power");
      return k;
    case Kind::QtE:
      k.e0 = acc.t0;
      k.e1 = acc.t1;
      return k;
    case Kind::CovE:
    case Kind::CovH:
    case Kind::TInfE:
    case Kind::TInfH:
      k.e0 = acc.t;
      return k;
    case Kind::InfE:
    case Kind::InfH:
      if (acc.t != 0) return Key(k.kind == Kind::InfE ? Kind::TInfE : Kind::TInfH, 0, 0, acc.t,
                                 k.e0, k.e1);
      return k;
    case Kind::CgGen:
      if (acc.t0 != 0 || acc.t1 != 0) throw Error("key parse: unexpected torus power");
      return k;
    default:
      if (acc.t0 != 0 || acc.t1 != 0 || acc.t != 0)
        throw Error("key parse: unexpected torus power");
      return k;
  }
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["checks"] = r.checks;
  j["failures"] = r.failure_count;
  nlohmann::ordered_json fl = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json e;
    e["inputs"] = f.inputs;
    e["expected"] = f.expected;
    e["got"] = f.got;
    fl.push_back(e);
  }
  j["counterexamples"] = fl;
  for (const auto& [k, v] : r.notes) j[k] = v;
  j["wall_ms"] = r.wall_ms;
  return j;
}

nlohmann::ordered_json export_constants(const Algebra& alg, long window, const KeyContext& ctx) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  auto keys = alg.spanning_keys(window);
  for (const Key& a : keys)
    for (const Key& b : keys) {
      SparseVec br = alg.bracket_keys(a, b);
      if (br.is_zero()) continue;
      nlohmann::ordered_json e;
      e["a"] = key_str(a, ctx);
      e["b"] = key_str(b, ctx);
      nlohmann::ordered_json terms = nlohmann::ordered_json::array();
      for (const auto& t : br.terms()) {
        nlohmann::ordered_json term;
        term["key"] = key_str(t.first, ctx);
        term["coeff"] = t.second.str();
        terms.push_back(term);
      }
      e["bracket"] = terms;
      out.push_back(e);
    }
  return out;
}

nlohmann::ordered_json export_roots(const DiagramAut& mu, int weyl_len, long bound) {
  FoldedData fd = folded_datum(mu);
  auto roots = twisted_roots(mu, fd, weyl_len, bound);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const TwistedRoot& r : roots) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json fin = nlohmann::ordered_json::array();
    for (const Rat& c : r.finite) fin.push_back(c.get_str());
    e["finite"] = fin;
    e["delta1"] = r.d1.get_str();
    e["delta0"] = r.d0.get_str();
    out.push_back(e);
  }
  return out;
}

nlohmann::ordered_json export_iproducts(const ConformalCg& cg, long window,
                                        const KeyContext& ctx) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  auto gens = cg.generators(window);
  for (const Key& a : gens)
    for (const Key& b : gens)
      for (long i = 0; i <= 2; ++i) {
        SparseVec p = cg.gen_product(a, i, b);
        if (p.is_zero()) continue;
        nlohmann::ordered_json e;
        e["a"] = key_str(a, ctx);
        e["i"] = i;
        e["b"] = key_str(b, ctx);
        e["value"] = elem_str(p, ctx);
        out.push_back(e);
      }
  return out;
}

nlohmann::ordered_json export_correspondence(int N, long window) {
  CovSlInfAlgebra cov(N);
  QtAlgebra qt(N);
  KeyContext cctx{nullptr, Domain::CovInf, N};
  KeyContext qctx{nullptr, Domain::Qt, N};
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  auto keys = cov.spanning_keys(window);
  for (const Key& k : keys) {
    nlohmann::ordered_json e;
    e["class"] = key_str(k, cctx);
    e["image"] = elem_str(correspondence_map(cov, SparseVec::unit(k, cov.one_scalar()), qt), qctx);
    out.push_back(e);
  }
  return out;
}

}  // namespace ealax

#include "aligned/spaces/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace aligned::spaces {

using exact::RatFn;

namespace {

struct Record {
  std::string type;
  std::map<std::string, std::string> kv;
  std::set<std::string> flags;
  int line = 0;
};

class Reader {
 public:
  Reader(const std::string& source, const Record& r) : source_(source), r_(r) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw CatalogError(source_ + ":" + std::to_string(r_.line) + ": " + r_.type + ": " + what);
  }

  const std::string& str(const std::string& key) const {
    auto it = r_.kv.find(key);
    if (it == r_.kv.end()) fail("missing field '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::optional<std::string> opt(const std::string& key) const {
    auto it = r_.kv.find(key);
    if (it == r_.kv.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
  }

  long integer(const std::string& key) const {
    const std::string& v = str(key);
    char* end = nullptr;
    long x = std::strtol(v.c_str(), &end, 10);
    if (v.empty() || *end != '\0') fail("field '" + key + "' is not an integer: '" + v + "'");
    return x;
  }

  Rational rational(const std::string& key) const {
    try {
      return exact::parse_rational(str(key));
    } catch (const std::invalid_argument& e) {
      fail("field '" + key + "': " + e.what());
    }
  }

  RatFn ratfn(const std::string& key) const {
    try {
      return exact::parse_ratfn(str(key));
    } catch (const std::exception& e) {
      fail("field '" + key + "': " + e.what());
    }
  }

  GroupName group(const std::string& key) const {
    try {
      return parse_group(str(key));
    } catch (const std::invalid_argument& e) {
      fail("field '" + key + "': " + e.what());
    }
  }

  bool verdict(const std::string& key) const {
    const std::string& v = str(key);
    if (v == "exists") return true;
    if (v == "not_exists") return false;
    fail("field '" + key + "' must be exists or not_exists, got '" + v + "'");
  }

  bool flag(const std::string& f) const {
    used_flags_.insert(f);
    return r_.flags.count(f) > 0;
  }

  void finish() const {
    for (const auto& [k, v] : r_.kv) {
      if (!used_.count(k)) fail("unknown field '" + k + "'");
    }
    for (const auto& f : r_.flags) {
      if (!used_flags_.count(f)) fail("unknown flag '" + f + "'");
    }
  }

 private:
  const std::string& source_;
  const Record& r_;
  mutable std::set<std::string> used_;
  mutable std::set<std::string> used_flags_;
};

std::vector<Record> tokenize(std::string_view text, const std::string& source) {
  std::vector<Record> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    Record r;
    r.line = lineno;
    while (words >> w) {
      if (r.type.empty()) {
        r.type = w;
        continue;
      }
      auto eq = w.find('=');
      if (eq == std::string::npos) {
        r.flags.insert(w);
      } else {
        std::string key = w.substr(0, eq);
        if (r.kv.count(key)) {
          throw CatalogError(source + ":" + std::to_string(lineno) + ": duplicate field '" + key + "'");
        }
        r.kv[key] = w.substr(eq + 1);
      }
    }
    if (!r.type.empty()) out.push_back(std::move(r));
  }
  return out;
}

bool is_positive_integer(const Rational& q) { return q.get_den() == 1 && q > 0; }

long as_long(const Rational& q) { return q.get_num().get_si(); }

}  // namespace

bool ExistenceSet::contains(long m) const {
  switch (kind) {
    case Kind::kAll: return true;
    case Kind::kNone: return false;
    case Kind::kUpTo: return m <= k;
    case Kind::kFrom: return m >= k;
  }
  return false;
}

std::string ExistenceSet::to_string() const {
  switch (kind) {
    case Kind::kAll: return "all";
    case Kind::kNone: return "none";
    case Kind::kUpTo: return "m<=" + std::to_string(k);
    case Kind::kFrom: return "m>=" + std::to_string(k);
  }
  return "?";
}

ExistenceSet ExistenceSet::parse(std::string_view text) {
  ExistenceSet e;
  if (text == "all") return e;
  if (text == "none") {
    e.kind = Kind::kNone;
    return e;
  }
  if (text.size() > 3 && (text.substr(0, 3) == "m<=" || text.substr(0, 3) == "m>=")) {
    e.kind = text[1] == '<' ? Kind::kUpTo : Kind::kFrom;
    std::string digits(text.substr(3));
    char* end = nullptr;
    e.k = std::strtol(digits.c_str(), &end, 10);
    if (!digits.empty() && *end == '\0') return e;
  }
  throw std::invalid_argument("bad existence set '" + std::string(text) + "' (all, none, m<=k, m>=k)");
}

std::string FamilySpec::display() const { return G1.text + "x" + G2.text + "/" + K.text; }

AlignedSpace FamilySpec::instantiate(long m) const {
  const Rational mm(m);
  auto dim = [&](const RatFn& f, const char* what) {
    Rational v = f(mm);
    if (!is_positive_integer(v)) {
      throw std::domain_error(std::string(what) + " of " + name + " is not a positive integer at m = " +
                              std::to_string(m));
    }
    return as_long(v);
  };
  const long n1 = dim(n1_of_m, "n1"), n2 = dim(n2_of_m, "n2"), d = dim(d_of_m, "d");
  const Rational a1 = a1_of_m(mm), a2 = a2_of_m(mm);
  const std::string g1 = G1.at(m), g2 = G2.at(m), k = K.at(m);
  std::string id = a1 <= a2 ? space_identifier(g1, g2, k) : space_identifier(g2, g1, k);
  return AlignedSpace::semisimple(id, n1, n2, d, a1, a2);
}

void AbelianTemplate::dimensions(long m, long& n1, long& n2, long& d) const {
  const Rational mm(m);
  Rational r = rank(mm);
  Rational g1 = G1.dimension()(mm), g2 = G2.dimension()(mm);
  if (!is_positive_integer(r) || !is_positive_integer(g1 - r) || !is_positive_integer(g2 - r)) {
    throw std::domain_error("abelian template " + name + " has no valid dimensions at m = " + std::to_string(m));
  }
  d = as_long(r);
  n1 = as_long(g1 - r);
  n2 = as_long(g2 - r);
}

const KGroup* Catalog::find_kgroup(const std::string& name) const {
  for (const auto& k : kgroups) {
    if (k.name == name) return &k;
  }
  return nullptr;
}

const FamilySpec* Catalog::find_family(const std::string& name) const {
  for (const auto& f : families) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const AbelianTemplate* Catalog::find_abelian_template(const std::string& name) const {
  for (const auto& t : abelian_templates) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

const AbelianExample* Catalog::find_abelian_example(const std::string& name) const {
  for (const auto& e : abelian_examples) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::string space_identifier(const std::string& G1, const std::string& G2, const std::string& K) {
  return compact(G1) + "x" + compact(G2) + "_" + compact(K);
}

Catalog parse_catalog(std::string_view text, const std::string& source) {
  Catalog cat;
  cat.source = source;
  const auto records = tokenize(text, source);
  if (records.empty()) throw CatalogError(source + ": catalog is empty");

  auto find_param = [&](const GroupName& k) -> ParamKGroup* {
    for (auto& p : cat.param_kgroups) {
      if (p.K.text == k.text) return &p;
    }
    return nullptr;
  };

  for (const auto& r : records) {
    Reader in(source, r);
    if (r.type == "kgroup") {
      KGroup k;
      k.name = in.str("K");
      GroupName kg = in.group("K");
      k.d = in.integer("d");
      if (kg.is_parametric()) in.fail("kgroup K must be concrete");
      if (group_dimension(kg) != k.d) {
        in.fail("d = " + std::to_string(k.d) + " but dim " + k.name + " = " + std::to_string(group_dimension(kg)));
      }
      if (auto m = in.opt("m")) {
        k.m = in.integer("m");
        k.param_family = kg.family;
        if (kg.index(Rational(0)) != Rational(k.m)) in.fail("m does not match the index of " + k.name);
      }
      if (cat.find_kgroup(k.name)) in.fail("duplicate kgroup " + k.name);
      in.finish();
      cat.kgroups.push_back(std::move(k));
    } else if (r.type == "factor") {
      IrreducibleFactor f;
      f.isotropy_K = in.str("K");
      f.name = in.str("G");
      GroupName g = in.group("G");
      f.group_family = g.family;
      f.group_dim = in.integer("dimG");
      f.n = in.integer("n");
      f.a = in.rational("a");
      f.underlined = in.flag("underlined");
      f.adjoint = in.flag("adjoint");
      f.bound_exempt = in.flag("bound_exempt");
      if (auto note = in.opt("note")) f.embedding_note = *note;
      f.line = r.line;
      in.finish();
      auto it = std::find_if(cat.kgroups.begin(), cat.kgroups.end(),
                             [&](const KGroup& k) { return k.name == f.isotropy_K; });
      if (it == cat.kgroups.end()) in.fail("factor for undeclared K " + f.isotropy_K);
      f.d = it->d;
      if (g.is_parametric()) in.fail(f.name + " must be concrete");
      if (group_dimension(g) != f.group_dim) {
        in.fail(f.name + ": dimG = " + std::to_string(f.group_dim) + " but the group has dimension " +
                std::to_string(group_dimension(g)));
      }
      if (f.n < 1 || f.group_dim != f.n + f.d) in.fail(f.name + ": dimG must equal n + d with n >= 1");
      if (!(f.a > 0 && f.a < 1)) in.fail(f.name + ": 0 < a < 1 violated");
      Rational bound = admissibility_bound(f.d, f.n);
      if (!(f.a < bound) && !f.bound_exempt) {
        in.fail(f.name + ": a < (2d+n)/(2d+2n) = " + exact::to_string(bound) + " violated");
      }
      if (f.a < bound && f.bound_exempt) in.fail(f.name + ": bound_exempt set but the bound holds");
      if (f.adjoint && f.a != exact::make_rational(1, f.d - 2)) in.fail(f.name + ": adjoint factor needs a = 1/(d-2)");
      if (f.underlined && !it->param_family) in.fail(f.name + ": underlined factor over a sporadic K");
      for (const auto& other : it->factors) {
        if (other.name == f.name) in.fail("duplicate factor " + f.name + " over " + f.isotropy_K);
      }
      it->factors.push_back(std::move(f));
    } else if (r.type == "param_kgroup") {
      ParamKGroup p;
      p.K = in.group("K");
      p.d = in.ratfn("d");
      p.m_min = in.integer("m_min");
      in.finish();
      if (!p.K.is_parametric()) in.fail("param_kgroup K must depend on m");
      if (!(p.K.dimension() == p.d)) in.fail("d does not match dim " + p.K.text);
      if (find_param(p.K)) in.fail("duplicate param_kgroup " + p.K.text);
      cat.param_kgroups.push_back(std::move(p));
    } else if (r.type == "param_factor") {
      GroupName k = in.group("K");
      ParamKGroup* p = find_param(k);
      if (!p) in.fail("param_factor for undeclared K " + k.text);
      ParamFactor f;
      f.group = in.group("G");
      f.a = in.ratfn("a");
      f.adjoint = in.flag("adjoint");
      f.bound_exempt = in.flag("bound_exempt");
      f.line = r.line;
      in.finish();
      f.n = f.group.dimension() - p->d;
      if (f.adjoint && !(f.a == RatFn(1) / (p->d - 2))) in.fail(f.group.text + ": adjoint factor needs a = 1/(d-2)");
      p->factors.push_back(std::move(f));
    } else if (r.type == "family") {
      FamilySpec f;
      f.name = in.str("name");
      f.K = in.group("K");
      f.G1 = in.group("G1");
      f.G2 = in.group("G2");
      f.m_min = in.integer("m_min");
      f.table_row = static_cast<int>(in.integer("row"));
      try {
        f.expected = ExistenceSet::parse(in.str("expect"));
      } catch (const std::invalid_argument& e) {
        in.fail(e.what());
      }
      in.finish();
      const ParamKGroup* p = find_param(f.K);
      if (!p) in.fail("family over undeclared K " + f.K.text);
      if (f.m_min < p->m_min) in.fail("m_min below the parametric row's range");
      auto lookup = [&](const GroupName& g) -> const ParamFactor& {
        for (const auto& pf : p->factors) {
          if (pf.group.text == g.text) return pf;
        }
        in.fail(g.text + " is not a parametric factor over " + f.K.text);
      };
      const ParamFactor& f1 = lookup(f.G1);
      const ParamFactor& f2 = lookup(f.G2);
      if (&f1 == &f2) in.fail("family needs two distinct factors");
      f.n1_of_m = f1.n;
      f.n2_of_m = f2.n;
      f.d_of_m = p->d;
      f.a1_of_m = f1.a;
      f.a2_of_m = f2.a;
      if (cat.find_family(f.name)) in.fail("duplicate family " + f.name);
      TableRow row;
      row.table = "flies";
      row.row = f.table_row;
      row.kind = TableRow::Kind::kFamily;
      row.family = f.name;
      row.expect_exists = f.expected.kind != ExistenceSet::Kind::kNone;
      row.line = r.line;
      cat.rows.push_back(row);
      cat.families.push_back(std::move(f));
    } else if (r.type == "space" || r.type == "instance" || r.type == "family_row") {
      TableRow row;
      row.table = in.str("table");
      row.row = static_cast<int>(in.integer("row"));
      row.expect_exists = in.verdict("expect");
      row.line = r.line;
      if (r.type == "space") {
        row.kind = TableRow::Kind::kSpace;
        row.K = in.str("K");
        row.G1 = in.str("G1");
        row.G2 = in.str("G2");
      } else {
        row.kind = r.type == "instance" ? TableRow::Kind::kInstance : TableRow::Kind::kFamily;
        row.family = in.str("family");
        if (!cat.find_family(row.family)) in.fail("unknown family " + row.family);
        if (row.kind == TableRow::Kind::kInstance) {
          row.name = in.str("name");
          row.m = in.integer("m");
        }
      }
      in.finish();
      cat.rows.push_back(std::move(row));
    } else if (r.type == "abelian_template") {
      AbelianTemplate t;
      t.name = in.str("name");
      t.G1 = in.group("G1");
      t.G2 = in.group("G2");
      t.rank = in.ratfn("rank");
      if (in.opt("m_min")) t.m_min = in.integer("m_min");
      in.finish();
      bool parametric = t.G1.is_parametric() || t.G2.is_parametric() || t.rank.num().degree() > 0;
      if (parametric != (t.m_min > 0)) in.fail("m_min is required exactly for parametric templates");
      try {
        long n1, n2, d;
        t.dimensions(parametric ? t.m_min : 0, n1, n2, d);
      } catch (const std::domain_error& e) {
        in.fail(e.what());
      }
      cat.abelian_templates.push_back(std::move(t));
    } else if (r.type == "abelian") {
      AbelianExample e;
      e.name = in.str("name");
      e.template_name = in.str("template");
      if (in.opt("m")) e.m = in.integer("m");
      e.p = in.integer("p");
      e.q = in.integer("q");
      e.kappa1 = in.rational("k1");
      e.kappa2 = in.rational("k2");
      in.finish();
      const AbelianTemplate* t = cat.find_abelian_template(e.template_name);
      if (!t) in.fail("unknown abelian template " + e.template_name);
      if (t->m_min > 0 && e.m < t->m_min) in.fail("m below the template's range");
      try {
        t->dimensions(e.m, e.n1, e.n2, e.d);
        (void)abelian_space(e.name, e.p, e.q, e.kappa1, e.kappa2, e.n1, e.n2, e.d);
      } catch (const std::exception& ex) {
        in.fail(ex.what());
      }
      cat.abelian_examples.push_back(std::move(e));
    } else {
      Reader(source, r).fail("unknown record type");
    }
  }

  // Members of a parametric row must agree with its generic factors.
  for (const auto& k : cat.kgroups) {
    if (!k.param_family) continue;
    const ParamKGroup* p = nullptr;
    for (const auto& pk : cat.param_kgroups) {
      if (pk.K.family == *k.param_family) p = &pk;
    }
    const std::string where = source + ": kgroup " + k.name + ": ";
    if (!p) throw CatalogError(where + "no param_kgroup for its family");
    if (k.m < p->m_min) throw CatalogError(where + "m below the parametric row's range");
    std::size_t generic = 0;
    for (const auto& f : k.factors) {
      if (f.underlined) continue;
      ++generic;
      bool matched = false;
      for (const auto& pf : p->factors) {
        if (pf.group.at(k.m) == f.name) {
          if (pf.a(Rational(k.m)) != f.a) {
            throw CatalogError(where + f.name + " has a = " + exact::to_string(f.a) + " but the generic formula gives " +
                               exact::to_string(pf.a(Rational(k.m))));
          }
          if (pf.bound_exempt != f.bound_exempt) throw CatalogError(where + f.name + ": bound_exempt differs from its row");
          matched = true;
        }
      }
      if (!matched) throw CatalogError(where + f.name + " is not a generic factor; mark it underlined");
    }
    if (generic != p->factors.size()) throw CatalogError(where + "missing generic factors");
  }
  return cat;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError(path + ": cannot open catalog");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), path);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("ALIGNED_CATALOG"); env && *env) return env;
#ifdef ALIGNED_DEFAULT_CATALOG
  return ALIGNED_DEFAULT_CATALOG;
#else
  return "data/catalog.txt";
#endif
}

ClassC enumerate_class_C(const Catalog& catalog, bool check_counts) {
  ClassC out;
  std::set<std::string> seen;
  for (const auto& k : catalog.kgroups) {
    for (std::size_t i = 0; i < k.factors.size(); ++i) {
      for (std::size_t j = i + 1; j < k.factors.size(); ++j) {
        const auto& f1 = k.factors[i];
        const auto& f2 = k.factors[j];
        if (k.param_family && !f1.underlined && !f2.underlined) continue;  // family member
        const bool keep = f1.a <= f2.a;
        const auto& lo = keep ? f1 : f2;
        const auto& hi = keep ? f2 : f1;
        std::string id = space_identifier(lo.name, hi.name, k.name);
        out.sporadic.push_back({AlignedSpace::semisimple(id, lo.n, hi.n, k.d, lo.a, hi.a), k.name, lo.name, hi.name});
        seen.insert(id);
      }
    }
  }
  // Canonical order is by identifier so that catalog permutations agree.
  std::sort(out.sporadic.begin(), out.sporadic.end(),
            [](const CatalogSpace& x, const CatalogSpace& y) { return x.space.name() < y.space.name(); });

  for (const auto& p : catalog.param_kgroups) {
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
      for (std::size_t j = i + 1; j < p.factors.size(); ++j) {
        const std::string& g1 = p.factors[i].group.text;
        const std::string& g2 = p.factors[j].group.text;
        const FamilySpec* match = nullptr;
        for (const auto& f : catalog.families) {
          if (f.K.text == p.K.text &&
              ((f.G1.text == g1 && f.G2.text == g2) || (f.G1.text == g2 && f.G2.text == g1))) {
            match = &f;
          }
        }
        if (!match) {
          throw CatalogError(catalog.source + ": no family record for " + g1 + "x" + g2 + "/" + p.K.text);
        }
        out.families.push_back(*match);
      }
    }
  }
  std::sort(out.families.begin(), out.families.end(),
            [](const FamilySpec& x, const FamilySpec& y) { return x.table_row < y.table_row; });

  if (check_counts) {
    if (out.sporadic.size() != kSporadicCount || out.families.size() != kFamilyCount ||
        catalog.families.size() != kFamilyCount) {
      throw CatalogError(catalog.source + ": class C has " + std::to_string(out.sporadic.size()) + " sporadic spaces and " +
                         std::to_string(out.families.size()) + " families; expected 70 and 12");
    }
  }
  return out;
}

}  // namespace aligned::spaces

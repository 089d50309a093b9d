#include "hopfcyc/hopf_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hopfcyc/linalg.hpp"

namespace hopfcyc {

namespace {

struct Line {
  std::size_t number;
  std::string value;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

class Reader {
 public:
  Reader(std::map<std::string, Line> kv, Field field) : kv_(std::move(kv)), field_(field) {}

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  const Line& get(const std::string& key) {
    auto it = kv_.find(key);
    if (it == kv_.end()) throw InputError("missing key '" + key + "'");
    used_.insert(key);
    return it->second;
  }

  std::size_t dim(const std::string& key) {
    const Line& l = get(key);
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(l.value, &pos);
    } catch (const std::exception&) {
      fail(l.number, "expected a positive integer for '" + key + "'");
    }
    if (pos != l.value.size() || v == 0) fail(l.number, "expected a positive integer for '" + key + "'");
    return v;
  }

  std::vector<std::string> basis(const std::string& key, std::size_t d) {
    if (!has(key)) {
      std::vector<std::string> b;
      for (std::size_t i = 0; i < d; ++i) b.push_back("b" + std::to_string(i));
      return b;
    }
    const Line& l = get(key);
    std::istringstream is(l.value);
    std::vector<std::string> b;
    for (std::string w; is >> w;) b.push_back(w);
    if (b.size() != d) fail(l.number, "basis has " + std::to_string(b.size()) + " labels, expected " + std::to_string(d));
    return b;
  }

  LinearMap map(const std::string& key, const TensorShape& dom, const TensorShape& cod) {
    const Line& l = get(key);
    LinearMap m(field_, dom, cod);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::istringstream entries(l.value);
    for (std::string entry; std::getline(entries, entry, ';');) {
      if (trim(entry).empty()) continue;
      std::istringstream es(entry);
      std::string r, c, num, den, extra;
      if (!(es >> r >> c >> num >> den) || (es >> extra))
        fail(l.number, "entry '" + trim(entry) + "' of '" + key + "' must be 'row col num den'");
      std::size_t row = 0, col = 0;
      mpz_class zn, zd;
      try {
        row = std::stoul(r);
        col = std::stoul(c);
        if (zn.set_str(num, 10) != 0 || zd.set_str(den, 10) != 0) throw std::invalid_argument("integer");
      } catch (const std::exception&) {
        fail(l.number, "entry '" + trim(entry) + "' of '" + key + "' is not made of integers");
      }
      if (r.find('-') != std::string::npos || c.find('-') != std::string::npos)
        fail(l.number, "negative index in '" + key + "'");
      if (zd <= 0) fail(l.number, "denominator must be positive in '" + key + "'");
      if (row >= m.rows() || col >= m.cols())
        fail(l.number, "entry (" + r + ", " + c + ") outside the " + std::to_string(m.rows()) + " x " +
                           std::to_string(m.cols()) + " matrix '" + key + "'");
      if (!seen.insert({row, col}).second) fail(l.number, "duplicate entry (" + r + ", " + c + ") in '" + key + "'");
      try {
        m.set(row, col, Scalar::from_rational(field_, mpq_class(zn, zd)));
      } catch (const std::domain_error& e) {
        fail(l.number, e.what());
      }
    }
    return m;
  }

  void reject_unused() const {
    for (const auto& [k, l] : kv_)
      if (!used_.count(k)) fail(l.number, "unexpected key '" + k + "'");
  }

 private:
  std::map<std::string, Line> kv_;
  std::set<std::string> used_;
  Field field_;
};

std::string map_text(const LinearMap& m) {
  std::string s;
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) {
      const mpq_class q = e.value.to_rational();
      if (!s.empty()) s += "; ";
      s += std::to_string(e.index) + " " + std::to_string(c) + " " + q.get_num().get_str() + " " +
           q.get_den().get_str();
    }
  return s;
}

std::string basis_text(const std::vector<std::string>& b) {
  std::string s;
  for (const auto& w : b) s += (s.empty() ? "" : " ") + w;
  return s;
}

CoalgebraInstance read_coalgebra(Reader& r, const std::string& prefix, const std::string& name, const Field& f) {
  CoalgebraInstance c;
  c.name = r.has(prefix + "name") ? r.get(prefix + "name").value : name;
  c.field = f;
  c.dim = r.dim(prefix + "dim");
  c.basis = r.basis(prefix + "basis", c.dim);
  c.comultiplication = r.map(prefix + "comultiplication", TensorShape{c.dim}, TensorShape{c.dim, c.dim});
  c.counit = r.map(prefix + "counit", TensorShape{c.dim}, TensorShape{});
  return c;
}

HopfInstance read_hopf(Reader& r, const std::string& prefix, const std::string& name, const Field& f) {
  HopfInstance h;
  h.name = r.has(prefix + "name") ? r.get(prefix + "name").value : name;
  h.field = f;
  h.dim = r.dim(prefix + "dim");
  const std::size_t d = h.dim;
  h.basis = r.basis(prefix + "basis", d);
  h.comultiplication = r.map(prefix + "comultiplication", TensorShape{d}, TensorShape{d, d});
  h.counit = r.map(prefix + "counit", TensorShape{d}, TensorShape{});
  h.multiplication = r.map(prefix + "multiplication", TensorShape{d, d}, TensorShape{d});
  h.unit = r.map(prefix + "unit", TensorShape{}, TensorShape{d});
  h.antipode = r.map(prefix + "antipode", TensorShape{d}, TensorShape{d});
  if (r.has(prefix + "antipode_inverse")) {
    h.antipode_inverse = r.map(prefix + "antipode_inverse", TensorShape{d}, TensorShape{d});
  } else {
    // A singular antipode leaves the zero map, which the bijectivity check rejects.
    try {
      h.antipode_inverse = inverse(h.antipode);
    } catch (const ConsistencyError&) {
      h.antipode_inverse = LinearMap::zero(f, TensorShape{d}, TensorShape{d});
    }
  }
  return h;
}

void write_coalgebra(std::ostringstream& os, const std::string& prefix, const CoalgebraInstance& c) {
  os << prefix << "name = " << c.name << "\n";
  os << prefix << "dim = " << c.dim << "\n";
  os << prefix << "basis = " << basis_text(c.basis) << "\n";
  os << prefix << "comultiplication = " << map_text(c.comultiplication) << "\n";
  os << prefix << "counit = " << map_text(c.counit) << "\n";
}

void write_hopf(std::ostringstream& os, const std::string& prefix, const HopfInstance& h) {
  os << prefix << "name = " << h.name << "\n";
  os << prefix << "dim = " << h.dim << "\n";
  os << prefix << "basis = " << basis_text(h.basis) << "\n";
  os << prefix << "comultiplication = " << map_text(h.comultiplication) << "\n";
  os << prefix << "counit = " << map_text(h.counit) << "\n";
  os << prefix << "multiplication = " << map_text(h.multiplication) << "\n";
  os << prefix << "unit = " << map_text(h.unit) << "\n";
  os << prefix << "antipode = " << map_text(h.antipode) << "\n";
  os << prefix << "antipode_inverse = " << map_text(h.antipode_inverse) << "\n";
}

}  // namespace

InstanceFile InstanceFile::from(const ComoduleCoalgebraInstance& m) {
  InstanceFile f;
  f.kind = Kind::comodule_coalgebra;
  f.name = m.name;
  f.field = m.hopf.field;
  f.hopf = m.hopf;
  f.coalgebra = m.coalgebra;
  f.coaction = m.coaction;
  return f;
}

InstanceFile InstanceFile::from(const HopfInstance& h) {
  InstanceFile f;
  f.kind = Kind::hopf;
  f.name = h.name;
  f.field = h.field;
  f.hopf = h;
  return f;
}

InstanceFile InstanceFile::from(const CoalgebraInstance& c) {
  InstanceFile f;
  f.kind = Kind::coalgebra;
  f.name = c.name;
  f.field = c.field;
  f.coalgebra = c;
  return f;
}

ComoduleCoalgebraInstance InstanceFile::comodule() const {
  if (kind != Kind::comodule_coalgebra) throw InputError("instance '" + name + "' is not a comodule coalgebra");
  return {name, *hopf, *coalgebra, *coaction};
}

InstanceFile parse_instance(const std::string& text, std::optional<Field> field_override) {
  std::map<std::string, Line> kv;
  std::istringstream is(text);
  std::size_t number = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++number;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(number, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) fail(number, "empty key");
    if (!kv.emplace(key, Line{number, trim(line.substr(eq + 1))}).second) fail(number, "duplicate key '" + key + "'");
  }

  auto need = [&](const std::string& key) -> const Line& {
    auto it = kv.find(key);
    if (it == kv.end()) throw InputError("missing key '" + key + "'");
    return it->second;
  };

  InstanceFile out;
  const Line& field_line = need("field");
  try {
    out.field = Field::parse(field_line.value);
  } catch (const std::domain_error& e) {
    fail(field_line.number, e.what());
  }
  const Field realized = field_override.value_or(out.field);
  out.field = realized;

  Reader r(kv, realized);
  r.get("field");
  const Line& kind_line = r.get("kind");
  out.name = r.has("name") ? r.get("name").value : "unnamed";
  if (kind_line.value == "coalgebra") {
    out.kind = InstanceFile::Kind::coalgebra;
    out.coalgebra = read_coalgebra(r, "coalgebra.", out.name, realized);
  } else if (kind_line.value == "hopf") {
    out.kind = InstanceFile::Kind::hopf;
    out.hopf = read_hopf(r, "hopf.", out.name, realized);
  } else if (kind_line.value == "comodule-coalgebra") {
    out.kind = InstanceFile::Kind::comodule_coalgebra;
    out.hopf = read_hopf(r, "hopf.", out.name, realized);
    out.coalgebra = read_coalgebra(r, "coalgebra.", out.name, realized);
    out.coaction = r.map("coaction", TensorShape{out.coalgebra->dim}, TensorShape{out.hopf->dim, out.coalgebra->dim});
  } else {
    fail(kind_line.number, "kind must be coalgebra, hopf or comodule-coalgebra");
  }
  r.reject_unused();
  return out;
}

InstanceFile load_instance(const std::string& path, std::optional<Field> field_override) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_instance(ss.str(), field_override);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string serialize_instance(const InstanceFile& inst) {
  std::ostringstream os;
  switch (inst.kind) {
    case InstanceFile::Kind::coalgebra: os << "kind = coalgebra\n"; break;
    case InstanceFile::Kind::hopf: os << "kind = hopf\n"; break;
    case InstanceFile::Kind::comodule_coalgebra: os << "kind = comodule-coalgebra\n"; break;
  }
  os << "name = " << inst.name << "\n";
  os << "field = " << inst.field.to_string() << "\n";
  if (inst.hopf) write_hopf(os, "hopf.", *inst.hopf);
  if (inst.coalgebra) write_coalgebra(os, "coalgebra.", *inst.coalgebra);
  if (inst.coaction) os << "coaction = " << map_text(*inst.coaction) << "\n";
  return os.str();
}

}  // namespace hopfcyc

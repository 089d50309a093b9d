// Command-line front end: axiom checks, identity suites, cohomology tables and
// spectral pages for `.hopf` instances or built-in `catalog:<name>` instances.
//
// Exit codes: 0 all checks pass, 1 mathematical failure (with witness on stderr),
// 2 input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hopfcyc/catalog.hpp"
#include "hopfcyc/cohomology.hpp"
#include "hopfcyc/hopf_io.hpp"
#include "hopfcyc/suites.hpp"

using namespace hopfcyc;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

/// A failed precondition on well-formed input, e.g. an instance violating its axioms.
struct MathFailure {
  std::string message;
};

Field field_from_env() {
  const char* v = std::getenv("FIELD");
  if (!v || !*v) return Field::rationals();
  try {
    return Field::parse(v);
  } catch (const std::exception& e) {
    throw InputError(std::string("FIELD: ") + e.what());
  }
}

bool contains(const std::vector<std::string>& names, const std::string& n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

InstanceFile load(const std::string& source, const Field& field) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) != 0) return load_instance(source, field);
  const std::string name = source.substr(prefix.size());
  auto comodules = comodule_catalog_names();
  for (const auto& n : extended_comodule_catalog_names()) comodules.push_back(n);
  if (contains(comodules, name)) return InstanceFile::from(catalog_comodule(name, field));
  if (contains(hopf_catalog_names(), name)) return InstanceFile::from(catalog_hopf(name, field));
  throw InputError("unknown catalog instance '" + name + "'");
}

json suite_json(const CheckReport& r) {
  json failed = json::array();
  for (const auto& a : r.results)
    if (!a.passed) failed.push_back({{"axiom", a.axiom}, {"witness", a.witness}});
  return {{"checked", r.results.size()}, {"failed", failed}};
}

/// Runs the structural checks for whatever the file holds.
std::vector<std::pair<std::string, CheckReport>> structure_checks(const InstanceFile& inst) {
  std::vector<std::pair<std::string, CheckReport>> out;
  if (inst.hopf) {
    out.emplace_back("coalgebra of H", check_coalgebra(inst.hopf->coalgebra()));
    out.emplace_back("Hopf algebra", check_hopf(*inst.hopf));
  }
  if (inst.coalgebra) out.emplace_back("coalgebra", check_coalgebra(*inst.coalgebra));
  if (inst.kind == InstanceFile::Kind::comodule_coalgebra)
    out.emplace_back("comodule coalgebra", check_comodule_coalgebra(inst.comodule()));
  return out;
}

/// Prints failures to stderr; returns true when every suite passed.
bool report_suites(const std::vector<std::pair<std::string, CheckReport>>& suites) {
  bool ok = true;
  for (const auto& [name, r] : suites)
    for (const auto& a : r.results)
      if (!a.passed) {
        ok = false;
        std::cerr << "FAIL [" << name << "] " << a.axiom << ": " << a.witness << "\n";
      }
  return ok;
}

ComoduleCoalgebraInstance valid_comodule(const InstanceFile& inst) {
  const auto m = inst.comodule();
  const auto checks = structure_checks(inst);
  if (!report_suites(checks)) throw MathFailure{"instance '" + inst.name + "' violates its axioms"};
  return m;
}

/// The coalgebra whose standard cocyclic module is computed by `cohomology`.
CoalgebraInstance target_coalgebra(const InstanceFile& inst) {
  const auto checks = structure_checks(inst);
  if (!report_suites(checks)) throw MathFailure{"instance '" + inst.name + "' violates its axioms"};
  switch (inst.kind) {
    case InstanceFile::Kind::coalgebra: return *inst.coalgebra;
    case InstanceFile::Kind::hopf: return inst.hopf->coalgebra();
    case InstanceFile::Kind::comodule_coalgebra: return crossed_coproduct(inst.comodule());
  }
  throw InputError("unknown instance kind");
}

void emit(const std::string& text, const std::string& path) {
  std::cout << text;
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write report '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild and cyclic cohomology of crossed coproduct coalgebras"};
  app.require_subcommand(1);
  std::string instance, report_path, theory = "hc", out_dir = ".";
  std::size_t pmax = 2, qmax = 2, degree = 2;

  const auto with_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance, "path to a .hopf file or catalog:<name>")->required();
    sub->add_option("--report", report_path, "also write the JSON report to this file");
  };
  auto* check = app.add_subcommand("check", "verify the axioms of an instance");
  with_instance(check);
  auto* identities = app.add_subcommand("identities", "cocylindrical, isomorphism and conjugation suites");
  with_instance(identities);
  identities->add_option("--pmax", pmax)->check(CLI::Range(0, 6));
  identities->add_option("--qmax", qmax)->check(CLI::Range(0, 6));
  auto* cohomology = app.add_subcommand("cohomology", "HH or HC of the instance's coalgebra");
  with_instance(cohomology);
  cohomology->add_option("--theory", theory)->check(CLI::IsMember({"hh", "hc"}));
  cohomology->add_option("--degree", degree)->check(CLI::Range(0, 8));
  auto* spectral = app.add_subcommand("spectral", "E0, E1, E2 pages, filtered and closed form compared");
  with_instance(spectral);
  spectral->add_option("--pmax", pmax)->check(CLI::Range(0, 5));
  spectral->add_option("--qmax", qmax)->check(CLI::Range(0, 5));
  spectral->add_option("--theory", theory)->check(CLI::IsMember({"hh", "hc"}));
  auto* proposition = app.add_subcommand("proposition", "HH and HC of C>◁H against the coinvariant module");
  with_instance(proposition);
  proposition->add_option("--degree", degree)->check(CLI::Range(0, 6));
  auto* catalog = app.add_subcommand("catalog", "write the built-in instances as .hopf files");
  catalog->add_option("--dir", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const Field field = field_from_env();

    if (catalog->parsed()) {
      std::filesystem::create_directories(out_dir);
      const auto write = [&](const InstanceFile& f) {
        const auto path = std::filesystem::path(out_dir) / (f.name + ".hopf");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw InputError("cannot write '" + path.string() + "'");
        out << serialize_instance(f);
        std::cout << path.string() << "\n";
      };
      for (const auto& n : comodule_catalog_names()) write(InstanceFile::from(catalog_comodule(n, field)));
      for (const auto& n : extended_comodule_catalog_names()) write(InstanceFile::from(catalog_comodule(n, field)));
      return kOk;
    }

    const InstanceFile inst = load(instance, field);
    json j;
    j["instance"] = inst.name;
    j["field"] = inst.field.to_string();

    if (check->parsed()) {
      const auto suites = structure_checks(inst);
      json s = json::object();
      for (const auto& [name, r] : suites) s[name] = suite_json(r);
      j["suites"] = s;
      emit(j.dump(2) + "\n", report_path);
      return report_suites(suites) ? kOk : kMathFailure;
    }

    if (identities->parsed()) {
      const auto m = valid_comodule(inst);
      std::vector<std::pair<std::string, CheckReport>> suites;
      suites.emplace_back("cocylindrical", check_cocylindrical(natural_cocylindrical(m, pmax, qmax).family));
      suites.emplace_back("named identities", check_named_identities(m, pmax, qmax));
      suites.emplace_back("isomorphism", check_isomorphism(m, std::min(pmax, qmax)));
      suites.emplace_back("conjugation", check_conjugation(m, pmax, qmax));
      j["truncation"] = {pmax, qmax};
      json s = json::object();
      for (const auto& [name, r] : suites) s[name] = suite_json(r);
      j["suites"] = s;
      emit(j.dump(2) + "\n", report_path);
      return report_suites(suites) ? kOk : kMathFailure;
    }

    if (cohomology->parsed()) {
      const auto c = target_coalgebra(inst);
      auto r = hh_hc_dims(standard_cocyclic(c, degree + 1).family, parse_coefficients(theory), degree);
      r.instance = inst.name;
      emit(r.to_json(), report_path);
      return kOk;
    }

    if (spectral->parsed()) {
      const auto m = valid_comodule(inst);
      auto r = spectral_pages(m, parse_coefficients(theory), pmax, qmax);
      emit(r.to_json(), report_path);
      return kOk;
    }

    if (proposition->parsed()) {
      const auto m = valid_comodule(inst);
      const auto r = proposition_check(m, degree);
      j["degree"] = degree;
      j["supported"] = r.supported;
      if (!r.supported) {
        emit(j.dump(2) + "\n", report_path);
        std::cerr << "unsupported: " << m.hopf.name << " has no normalized integral\n";
        return kMathFailure;
      }
      j["crossed"] = json::parse(r.crossed.to_json());
      j["coinvariant"] = json::parse(r.coinvariant.to_json());
      j["agree"] = r.agree();
      emit(j.dump(2) + "\n", report_path);
      if (!r.agree()) std::cerr << "FAIL: HH/HC tables of the crossed coproduct and the coinvariants differ\n";
      return r.agree() ? kOk : kMathFailure;
    }
  } catch (const MathFailure& e) {
    std::cerr << "error: " << e.message << "\n";
    return kMathFailure;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

#include "modvir/commands.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "modvir/battery.hpp"
#include "modvir/modes.hpp"

namespace modvir {

namespace {

Ring base_ring(const RunConfig& cfg) {
  if (cfg.characteristic == 2) {
    throw UnsupportedCharacteristic(
        "characteristic 2 is rejected: the standing hypothesis is char F != 2, which the "
        "central term and the half-integer Fock weights both need");
  }
  return Ring::from_characteristic(cfg.characteristic);
}

bool formal_h(const RunConfig& cfg) { return cfg.h == "h"; }

ModuleParams params_for(const RunConfig& cfg, const Ring& base) {
  if (formal_h(cfg)) {
    Ring rh = base.polynomial();
    return ModuleParams(rh.parse(cfg.c), rh.variable());
  }
  return ModuleParams(base.parse(cfg.c), base.parse(cfg.h));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_scalar(const Json& j) {
  if (j.is_string()) return csv_field(j.get<std::string>());
  return csv_field(j.dump());
}

std::string partition_text(const Partition& p) {
  std::string s;
  for (int x : p.parts()) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string modes_text(const FockMonomial& m) {
  std::string s;
  for (int x : m.doubled_modes()) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

/// Fermionic weight of a slice: NS parity s collects degree + s/2.
std::string slice_weight(Sector sector, Parity parity, int degree) {
  int twice = 2 * degree;
  if (sector == Sector::NS) twice += static_cast<int>(parity);
  return half_integer_string(twice);
}

std::string ring_label(const Ring& r) { return r.name(); }

void append_verma_csv(std::ostringstream& os, const std::string& space, std::size_t index,
                      const VermaVector& v) {
  for (const auto& [p, c] : v.terms()) {
    os << space << ',' << index << ',' << partition_text(p) << ',' << csv_scalar(scalar_to_json(c)) << '\n';
  }
}

}  // namespace

std::string CommandOutput::render(const std::string& format) const {
  if (format == "json") return json.dump(2) + "\n";
  if (format == "csv") return csv;
  if (format == "pretty") return pretty;
  throw std::invalid_argument("format must be json, csv or pretty, got '" + format + "'");
}

CommandOutput cmd_singvec(const RunConfig& cfg) {
  if (cfg.degree < 1) throw std::invalid_argument("singvec needs --degree >= 1");
  if (formal_h(cfg)) throw std::invalid_argument("singvec needs a numeric --h");
  Ring ring = base_ring(cfg);
  VermaModule module(params_for(cfg, ring));
  const bool vacuum = module.params().h().is_zero();

  auto verma = singular_space(module, cfg.degree, SearchSpace::Verma);
  CommandOutput out;
  out.json = Json{{"c", scalar_to_json(module.params().c())},
                  {"h", scalar_to_json(module.params().h())},
                  {"char", ring.characteristic()},
                  {"degree", cfg.degree}};
  Json vecs = Json::array();
  for (const auto& v : verma.vectors) vecs.push_back(verma_to_json(v));
  out.json["verma"] = vecs;

  std::ostringstream csv, pretty;
  csv << "space,index,partition,coeff\n";
  pretty << "V(" << module.params().c().to_string() << ", " << module.params().h().to_string()
         << ") over " << ring_label(ring) << ", degree " << cfg.degree << '\n';
  pretty << "  Verma module: " << verma.vectors.size() << " singular vector(s)\n";
  for (std::size_t i = 0; i < verma.vectors.size(); ++i) {
    append_verma_csv(csv, "verma", i, verma.vectors[i]);
    pretty << "    " << verma.vectors[i].to_string() << '\n';
  }
  if (vacuum) {
    auto quotient = singular_space(module, cfg.degree, SearchSpace::VacuumQuotient);
    Json qv = Json::array();
    for (const auto& v : quotient.vectors) qv.push_back(verma_to_json(v));
    out.json["vacuum_quotient"] = qv;
    pretty << "  modulo U(Vir)L(-1)v: " << quotient.vectors.size() << " singular vector(s)\n";
    for (std::size_t i = 0; i < quotient.vectors.size(); ++i) {
      append_verma_csv(csv, "vacuum_quotient", i, quotient.vectors[i]);
      pretty << "    " << quotient.vectors[i].to_string() << '\n';
    }
  }
  out.csv = csv.str();
  out.pretty = pretty.str();
  return out;
}

CommandOutput cmd_irrdims(const RunConfig& cfg) {
  if (cfg.max < 0) throw std::invalid_argument("--max must be >= 0");
  if (formal_h(cfg)) throw std::invalid_argument("irrdims needs a numeric --h");
  Ring ring = base_ring(cfg);
  VermaModule module(params_for(cfg, ring));
  CharacterTable table = irreducible_dims(module, cfg.max);

  const bool compare = cfg.compare_char0 && ring.characteristic() != 0;
  std::vector<std::size_t> char0;
  if (compare) {
    RunConfig zero = cfg;
    zero.characteristic = 0;
    VermaModule m0(params_for(zero, Ring::rationals()));
    char0 = irreducible_dims(m0, cfg.max).irreducible_dims();
  }

  CommandOutput out;
  out.json = character_table_to_json(table, module.params());
  std::ostringstream csv, pretty;
  csv << "degree,verma,radical,irreducible" << (compare ? ",char0,flag" : "") << '\n';
  pretty << "L(" << module.params().c().to_string() << ", " << module.params().h().to_string()
         << ") over " << ring_label(ring) << '\n';
  pretty << "  degree  verma  radical  irreducible" << (compare ? "  char0" : "") << '\n';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& r = table.rows[i];
    csv << r.degree << ',' << r.verma << ',' << r.radical << ',' << r.irreducible;
    char line[96];
    std::snprintf(line, sizeof line, "  %6d  %5zu  %7zu  %11zu", r.degree, r.verma, r.radical,
                  r.irreducible);
    pretty << line;
    if (compare) {
      const bool diff = char0[i] != r.irreducible;
      out.json["rows"][i]["char0"] = char0[i];
      out.json["rows"][i]["flag"] = diff ? "DIFF" : "same";
      csv << ',' << char0[i] << ',' << (diff ? "DIFF" : "same");
      std::snprintf(line, sizeof line, "  %5zu%s", char0[i], diff ? "  DIFF" : "");
      pretty << line;
    }
    csv << '\n';
    pretty << '\n';
  }
  out.csv = csv.str();
  out.pretty = pretty.str();
  return out;
}

CommandOutput cmd_fock_dims(const RunConfig& cfg) {
  if (cfg.max < 0) throw std::invalid_argument("--max must be >= 0");
  Sector sector = parse_sector(cfg.sector);
  Parity parity = parse_parity(cfg.parity);
  auto dims = sector_dims(sector, parity, cfg.max);
  CommandOutput out;
  Json rows = Json::array();
  std::ostringstream csv, pretty;
  csv << "degree,weight,dim\n";
  pretty << to_string(sector) << ' ' << to_string(parity) << " sector\n  degree  weight  dim\n";
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const std::string w = slice_weight(sector, parity, static_cast<int>(d));
    rows.push_back(Json{{"degree", d}, {"weight", w}, {"dim", dims[d]}});
    csv << d << ',' << w << ',' << dims[d] << '\n';
    char line[64];
    std::snprintf(line, sizeof line, "  %6zu  %6s  %3zu\n", d, w.c_str(), dims[d]);
    pretty << line;
  }
  out.json = Json{{"sector", to_string(sector)}, {"parity", to_string(parity)}, {"rows", rows}};
  out.csv = csv.str();
  out.pretty = pretty.str();
  return out;
}

CommandOutput cmd_vir_span(const RunConfig& cfg) {
  if (cfg.max < 0) throw std::invalid_argument("--max must be >= 0");
  Ring ring = base_ring(cfg);
  Sector sector = parse_sector(cfg.sector);
  Parity parity = parse_parity(cfg.parity);
  FockVector start = fock_highest_weight_vector(sector, parity, ring);
  auto span = vir_span_dims(start, cfg.max);
  auto fock = sector_dims(sector, parity, cfg.max);
  CommandOutput out;
  Json rows = Json::array();
  std::ostringstream csv, pretty;
  csv << "degree,weight,span,fock\n";
  pretty << "Virasoro span of " << start.to_string() << " in the " << to_string(sector) << ' '
         << to_string(parity) << " sector over " << ring_label(ring) << '\n'
         << "  degree  weight  span  fock\n";
  for (std::size_t d = 0; d < span.size(); ++d) {
    const std::string w = slice_weight(sector, parity, static_cast<int>(d));
    rows.push_back(Json{{"degree", d}, {"weight", w}, {"span", span[d]}, {"fock", fock[d]}});
    csv << d << ',' << w << ',' << span[d] << ',' << fock[d] << '\n';
    char line[64];
    std::snprintf(line, sizeof line, "  %6zu  %6s  %4zu  %4zu%s\n", d, w.c_str(), span[d], fock[d],
                  span[d] != fock[d] ? "  DIFF" : "");
    pretty << line;
  }
  out.json = Json{{"sector", to_string(sector)}, {"parity", to_string(parity)},
                  {"char", ring.characteristic()}, {"start", fock_to_json(start)},
                  {"rows", rows}};
  out.csv = csv.str();
  out.pretty = pretty.str();
  return out;
}

CommandOutput cmd_hwvec(const RunConfig& cfg) {
  if (cfg.degree < 0) throw std::invalid_argument("hwvec needs --degree >= 0");
  Ring ring = base_ring(cfg);
  Sector sector = parse_sector(cfg.sector);
  Parity parity = parse_parity(cfg.parity);
  auto vectors = fock_hw_vectors(sector, parity, cfg.degree, ring);
  const std::string w = slice_weight(sector, parity, cfg.degree);
  CommandOutput out;
  Json vecs = Json::array();
  std::ostringstream csv, pretty;
  csv << "index,modes,coeff\n";
  pretty << to_string(sector) << ' ' << to_string(parity) << ", weight " << w << " over "
         << ring_label(ring) << ": " << vectors.size() << " highest-weight vector(s)\n";
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    vecs.push_back(fock_to_json(vectors[i]));
    for (const auto& [m, c] : vectors[i].terms()) {
      csv << i << ',' << modes_text(m) << ',' << csv_scalar(scalar_to_json(c)) << '\n';
    }
    pretty << "  " << vectors[i].to_string() << '\n';
  }
  out.json = Json{{"sector", to_string(sector)}, {"parity", to_string(parity)},
                  {"char", ring.characteristic()}, {"degree", cfg.degree},
                  {"weight", w},                   {"vectors", vecs}};
  out.csv = csv.str();
  out.pretty = pretty.str();
  return out;
}

CommandOutput cmd_mode_apply(const RunConfig& cfg) {
  Ring ring = base_ring(cfg);
  VermaModule module(params_for(cfg, ring));
  const Ring& r = module.ring();
  StateWord state(r);
  if (cfg.state == "s" || cfg.state == "u") {
    state = named_state(cfg.state, r);
  } else {
    Json word = Json::parse(cfg.state);
    state = build_state(word.get<std::vector<int>>(), r);
  }
  VermaVector target = cfg.target.empty() ? module.highest_weight_vector()
                                          : verma_from_json(Json::parse(cfg.target), r);
  if (!target.is_homogeneous()) throw std::invalid_argument("mode-apply needs a homogeneous target");
  VermaVector result = mode_apply(state, cfg.mode, target, module);

  CommandOutput out;
  out.json = Json{{"c", scalar_to_json(module.params().c())},
                  {"h", scalar_to_json(module.params().h())},
                  {"char", ring.characteristic()},
                  {"state", state.to_string()},
                  {"mode", cfg.mode},
                  {"target", verma_to_json(target)},
                  {"result", verma_to_json(result)}};
  if (auto d = result.degree()) out.json["degree"] = *d;
  std::ostringstream csv;
  csv << "partition,coeff\n";
  for (const auto& [p, c] : result.terms()) csv << partition_text(p) << ',' << csv_scalar(scalar_to_json(c)) << '\n';
  out.csv = csv.str();
  out.pretty = "(" + state.to_string() + ")_" + std::to_string(cfg.mode) + " applied to " +
               target.to_string() + "\n  = " + result.to_string() + "\n";
  return out;
}

CommandOutput cmd_verify_paper(const RunConfig& cfg) {
  VerificationReport report = run_battery(cfg.only);
  CommandOutput out;
  Json checks = Json::array();
  std::ostringstream csv, pretty;
  csv << "name,group,criterion,status,provenance,value,elapsed_ms\n";
  std::size_t passed = 0, reported = 0;
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"group", c.group},
                          {"criterion", c.criterion},
                          {"status", to_string(c.status)},
                          {"provenance", c.provenance},
                          {"value", c.value},
                          {"elapsed_ms", c.elapsed_ms}});
    csv << c.name << ',' << c.group << ',' << c.criterion << ',' << to_string(c.status) << ','
        << c.provenance << ',' << csv_field(c.value) << ',' << c.elapsed_ms << '\n';
    std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "INFO";
    pretty << tag << "  " << c.name << " (" << c.elapsed_ms << " ms)\n      " << c.value << '\n';
    if (c.status == CheckStatus::Pass) ++passed;
    if (c.status == CheckStatus::Reported) ++reported;
  }
  Json summary{{"total", report.checks.size()},
               {"passed", passed},
               {"failed", report.failures()},
               {"reported", reported}};
  out.json = Json{{"checks", checks}, {"summary", summary}};
  pretty << report.checks.size() << " checks: " << passed << " passed, " << report.failures()
         << " failed, " << reported << " reported\n";
  out.csv = csv.str();
  out.pretty = pretty.str();
  out.exit_code = report.ok() ? 0 : 1;
  return out;
}

CommandOutput run_command(const RunConfig& cfg) {
  if (cfg.command == "singvec") return cmd_singvec(cfg);
  if (cfg.command == "irrdims") return cmd_irrdims(cfg);
  if (cfg.command == "fock-dims") return cmd_fock_dims(cfg);
  if (cfg.command == "vir-span") return cmd_vir_span(cfg);
  if (cfg.command == "hwvec") return cmd_hwvec(cfg);
  if (cfg.command == "mode-apply") return cmd_mode_apply(cfg);
  if (cfg.command == "verify-paper") return cmd_verify_paper(cfg);
  throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

}  // namespace modvir

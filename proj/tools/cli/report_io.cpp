#include "cli/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "cli/category_io.hpp"
#include "tcat/error.hpp"

namespace tcat::cli {

using nlohmann::json;

namespace {

std::string names_of(const std::vector<std::string>& labels, const std::vector<Label>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + labels.at(static_cast<std::size_t>(xs[i]));
  return s + "}";
}

json label_list(const std::vector<std::string>& labels, const std::vector<Label>& xs) {
  json out = json::array();
  for (Label x : xs) out.push_back(labels.at(static_cast<std::size_t>(x)));
  return out;
}

std::vector<Label> parse_labels(const std::vector<std::string>& labels, const json& j) {
  std::vector<Label> out;
  for (const json& x : j) {
    auto it = std::find(labels.begin(), labels.end(), x.get<std::string>());
    if (it == labels.end()) fail(ErrorKind::Parse, "unknown label in report");
    out.push_back(static_cast<Label>(it - labels.begin()));
  }
  return out;
}

std::string exponents(const std::vector<int>& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

std::string format_real(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

}  // namespace

std::string format_scalar(const Amplitude& a) {
  if (a.exact) {
    const ExactPhase& p = *a.exact;
    if (p.is_one()) return "1";
    if (p == ExactPhase(1, 2)) return "-1";
    if (p == ExactPhase(1, 4)) return "i";
    if (p == ExactPhase(3, 4)) return "-i";
    return "e(" + std::to_string(p.num()) + "/" + std::to_string(p.den()) + ")";
  }
  std::ostringstream os;
  os << std::setprecision(10) << a.value.real() << (a.value.imag() < 0 ? "-" : "+") << std::abs(a.value.imag()) << "i";
  return os.str();
}

json closure_to_json(const ClosureReport& r) {
  json j;
  j["parent"] = r.parent;
  j["labels"] = r.labels;
  j["transparent"] = label_list(r.labels, r.transparent);
  json orbits = json::array();
  for (const OrbitRecord& o : r.orbits) {
    json beta = json::object();
    for (const auto& [kl, v] : o.beta) {
      beta[r.labels.at(static_cast<std::size_t>(kl.first)) + "," + r.labels.at(static_cast<std::size_t>(kl.second))] =
          amplitude_to_json(Amplitude(v));
    }
    orbits.push_back(json{{"representative", r.labels.at(static_cast<std::size_t>(o.representative))},
                          {"members", label_list(r.labels, o.members)},
                          {"stabilizer", label_list(r.labels, o.stabilizer)},
                          {"radical", label_list(r.labels, o.radical)},
                          {"multiplicity", o.multiplicity},
                          {"beta_source", o.beta_source},
                          {"beta", beta}});
  }
  j["orbits"] = orbits;
  json sectors = json::array();
  for (const Sector& s : r.sectors) {
    json values = json::array();
    for (const ExactPhase& p : s.character_values) values.push_back(amplitude_to_json(Amplitude(p)));
    sectors.push_back(json{{"name", s.name},
                           {"orbit", s.orbit},
                           {"character", s.character},
                           {"character_values", values},
                           {"dim", s.dim},
                           {"twist", amplitude_to_json(s.twist)},
                           {"degenerate", s.degenerate},
                           {"multiplicity", s.multiplicity}});
  }
  j["sectors"] = sectors;
  json galois = json::array();
  for (std::size_t i = 0; i < r.galois_action.size(); ++i) {
    galois.push_back(json{{"character", r.galois_characters[i]}, {"permutation", r.galois_action[i]}});
  }
  j["galois"] = galois;
  j["global_dim_parent"] = r.global_dim_parent;
  j["global_dim_closure"] = r.global_dim_closure;
  j["modular"] = r.modular;
  j["trivial"] = r.trivial;
  return j;
}

ClosureReport closure_from_json(const json& j) {
  try {
    ClosureReport r;
    r.parent = j.at("parent").get<std::string>();
    r.labels = j.at("labels").get<std::vector<std::string>>();
    r.transparent = parse_labels(r.labels, j.at("transparent"));
    for (const json& o : j.at("orbits")) {
      OrbitRecord rec;
      rec.representative = parse_labels(r.labels, json::array({o.at("representative")})).front();
      rec.members = parse_labels(r.labels, o.at("members"));
      rec.stabilizer = parse_labels(r.labels, o.at("stabilizer"));
      rec.radical = parse_labels(r.labels, o.at("radical"));
      rec.multiplicity = o.at("multiplicity").get<int>();
      rec.beta_source = o.at("beta_source").get<std::string>();
      for (const auto& [key, v] : o.at("beta").items()) {
        const auto comma = key.find(',');
        const auto kl = parse_labels(r.labels, json::array({key.substr(0, comma), key.substr(comma + 1)}));
        const Amplitude a = amplitude_from_json(v);
        if (!a.exact) fail(ErrorKind::Parse, "beta entries must be exact phases");
        rec.beta[{kl[0], kl[1]}] = *a.exact;
      }
      r.orbits.push_back(std::move(rec));
    }
    for (const json& s : j.at("sectors")) {
      Sector sec;
      sec.name = s.at("name").get<std::string>();
      sec.orbit = s.at("orbit").get<std::size_t>();
      sec.character = s.at("character").get<std::vector<int>>();
      for (const json& v : s.at("character_values")) {
        const Amplitude a = amplitude_from_json(v);
        if (!a.exact) fail(ErrorKind::Parse, "character values must be exact phases");
        sec.character_values.push_back(*a.exact);
      }
      sec.dim = s.at("dim").get<double>();
      sec.twist = amplitude_from_json(s.at("twist"));
      sec.degenerate = s.at("degenerate").get<bool>();
      sec.multiplicity = s.at("multiplicity").get<int>();
      r.sectors.push_back(std::move(sec));
    }
    for (const json& g : j.at("galois")) {
      r.galois_characters.push_back(g.at("character").get<std::vector<int>>());
      r.galois_action.push_back(g.at("permutation").get<std::vector<std::size_t>>());
    }
    r.global_dim_parent = j.at("global_dim_parent").get<double>();
    r.global_dim_closure = j.at("global_dim_closure").get<double>();
    r.modular = j.at("modular").get<bool>();
    r.trivial = j.at("trivial").get<bool>();
    return r;
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed closure report: ") + e.what());
  }
}

std::string render_closure(const ClosureReport& r) {
  std::ostringstream os;
  os << "closure of " << r.parent << " by K = " << names_of(r.labels, r.transparent) << "\n";
  if (r.trivial) os << "parent is symmetric and K is all of it: the closure is trivial\n";
  os << "\norbits\n";
  os << std::left << std::setw(14) << "  rep" << std::setw(28) << "members" << std::setw(8) << "|K_rho|" << std::setw(8)
     << "|L_rho|" << std::setw(4) << "N" << "beta\n";
  for (const OrbitRecord& o : r.orbits) {
    os << "  " << std::setw(12) << r.labels.at(static_cast<std::size_t>(o.representative)) << std::setw(28)
       << names_of(r.labels, o.members) << std::setw(8) << o.stabilizer.size() << std::setw(8) << o.radical.size()
       << std::setw(4) << o.multiplicity << o.beta_source << "\n";
  }
  os << "\nsectors\n";
  os << std::setw(14) << "  name" << std::setw(14) << "dim" << std::setw(18) << "twist" << std::setw(12) << "degenerate"
     << "multiplicity\n";
  for (const Sector& s : r.sectors) {
    os << "  " << std::setw(12) << s.name << std::setw(14) << format_real(s.dim) << std::setw(18) << format_scalar(s.twist)
       << std::setw(12) << (s.degenerate ? "yes" : "no") << s.multiplicity << "\n";
  }
  os << "\nglobal dimension: parent " << format_real(r.global_dim_parent) << ", closure "
     << format_real(r.global_dim_closure) << "\n";
  os << "modular: " << (r.modular ? "yes" : "no") << "\n";
  if (!r.galois_action.empty()) {
    os << "\ngalois action\n";
    for (std::size_t i = 0; i < r.galois_action.size(); ++i) {
      os << "  chi" << exponents(r.galois_characters[i]) << ":";
      bool identity = true;
      for (std::size_t s = 0; s < r.galois_action[i].size(); ++s) {
        if (r.galois_action[i][s] != s) {
          identity = false;
          os << " " << r.sectors[s].name << "->" << r.sectors[r.galois_action[i][s]].name;
        }
      }
      os << (identity ? " identity\n" : "\n");
    }
  }
  return os.str();
}

json lattice_to_json(const std::vector<GaloisEntry>& entries, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const GaloisEntry& e : entries) {
    out.push_back(json{{"subgroup", e.subgroup},
                       {"annihilator", label_list(labels, e.annihilator)},
                       {"normal", e.normal},
                       {"table", closure_to_json(e.table)}});
  }
  return out;
}

std::string render_lattice(const std::vector<GaloisEntry>& entries, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << entries.size() << " subgroups of the Galois group\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const GaloisEntry& e = entries[i];
    os << "\nH" << i << " = {";
    for (std::size_t h = 0; h < e.subgroup.size(); ++h) os << (h ? ", " : "") << "chi" << exponents(e.subgroup[h]);
    os << "}  |H| = " << e.subgroup.size() << "  K_H = " << names_of(labels, e.annihilator) << "\n";
    for (const Sector& s : e.table.sectors) {
      os << "    " << std::left << std::setw(12) << s.name << "dim " << std::setw(12) << format_real(s.dim) << "twist "
         << std::setw(14) << format_scalar(s.twist) << "multiplicity " << s.multiplicity << "\n";
    }
  }
  return os.str();
}

}  // namespace tcat::cli

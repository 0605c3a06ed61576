#include "virtlink/cli/run.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "virtlink/alexander/biquandle.hpp"
#include "virtlink/alexander/relations.hpp"
#include "virtlink/bioq/axioms.hpp"
#include "virtlink/diagram/convert.hpp"
#include "virtlink/error.hpp"
#include "virtlink/statesum/contraction.hpp"
#include "virtlink/statesum/skein.hpp"
#include "virtlink/statesum/states.hpp"

#ifndef VIRTLINK_DEFAULT_CORPUS
#define VIRTLINK_DEFAULT_CORPUS "corpus"
#endif

namespace virtlink::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ring::BiLaurent;
using ring::VarPair;

namespace {

/// Bad command line or unreadable input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_morse_path(const std::string& path) { return fs::path(path).extension() == ".morse"; }

struct Diagram {
  std::string path;
  std::optional<diagram::GaussCode> gauss;
  std::optional<diagram::MorseWord> morse;

  const diagram::GaussCode& code() {
    if (!gauss) gauss = diagram::morse_to_gauss(*morse);
    return *gauss;
  }
  const diagram::MorseWord& word() {
    if (!morse) morse = diagram::gauss_to_morse(*gauss);
    return *morse;
  }
};

Diagram load(const std::string& path) {
  const std::string text = read_file(path);
  Diagram d;
  d.path = path;
  try {
    if (is_morse_path(path))
      d.morse = diagram::parse_morse(text);
    else
      d.gauss = diagram::parse_gauss(text);
  } catch (const ParseError& e) {
    throw e.with_file(path);
  } catch (const InvalidDiagram& e) {
    throw InputError(path + ": " + e.what());
  }
  return d;
}

const std::string& single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw InputError(c.command + " expects exactly one input file");
  return c.inputs.front();
}

json coefficient_json(const ring::Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

ring::Integer coefficient_from_json(const json& j) {
  if (j.is_string()) return ring::Integer(j.get<std::string>());
  return ring::Integer(j.get<long long>());
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

BiLaurent parse_expected(const std::string& text, VarPair vars, const std::string& file, std::size_t line) {
  try {
    return ring::parse_polynomial(text, vars);
  } catch (const ParseError& e) {
    throw ParseError(e.reason(), line, e.token(), file);
  }
}

// ---- commands ----

int cmd_gpoly(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  BiLaurent g = alexander::gpoly(d.code());
  if (c.format == Format::Json) {
    json j = poly_to_json(g, true);
    j["input"] = d.path;
    emit(out, j);
  } else {
    out << ring::render(g) << "\n";
  }
  return kOk;
}

int cmd_minors(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  if (c.k == 0) throw InputError("--k must be positive");
  auto rel = alexander::build_relations(d.code());
  if (c.k > rel.matrix.rows()) throw InputError("--k exceeds the matrix size " + std::to_string(rel.matrix.rows()));
  auto ms = alexander::minors(rel, c.k);
  if (c.format == Format::Json) {
    json j;
    j["input"] = d.path;
    j["k"] = c.k;
    j["size"] = rel.matrix.rows();
    j["minors"] = json::array();
    for (const auto& m : ms) j["minors"].push_back(poly_to_json(m, true));
    emit(out, j);
  } else {
    for (const auto& m : ms) out << ring::render(m) << "\n";
  }
  return kOk;
}

int cmd_biquandle(const RunConfig& c, std::ostream& out) {
  alexander::FiniteBiquandle b = [&] {
    try {
      return alexander::alexander_biquandle(c.p, c.s, c.t);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }();
  auto rep = alexander::verify_biquandle_axioms(b);
  if (c.format == Format::Json) {
    json j;
    j["p"] = c.p;
    j["s"] = c.s;
    j["t"] = c.t;
    j["axioms"] = json::array();
    for (const auto& a : rep.axioms) {
      json r;
      r["pass"] = a.pass;
      if (a.counterexample) r["counterexample"] = *a.counterexample;
      j["axioms"].push_back(r);
    }
    j["pass"] = rep.all_pass();
    emit(out, j);
  } else {
    for (std::size_t k = 0; k < rep.axioms.size(); ++k) {
      out << "axiom " << k + 1 << ": " << (rep.axioms[k].pass ? "pass" : "FAIL");
      if (rep.axioms[k].counterexample) out << " (" << *rep.axioms[k].counterexample << ")";
      out << "\n";
    }
  }
  return rep.all_pass() ? kOk : kFailed;
}

json morse_fields(const diagram::MorseWord& w) {
  auto st = diagram::stats(w);
  json j;
  j["rot"] = st.rot;
  j["v"] = st.v;
  j["components"] = st.components;
  return j;
}

int cmd_wpoly(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  BiLaurent w = statesum::evaluate_W(d.word());
  if (c.format == Format::Json) {
    json j = poly_to_json(w, false);
    j.update(morse_fields(d.word()));
    j["input"] = d.path;
    emit(out, j);
  } else {
    out << ring::render(w) << "\n";
  }
  return kOk;
}

int cmd_zpoly(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  BiLaurent z = statesum::zpoly(d.word());
  if (c.format == Format::Json) {
    json j = poly_to_json(z, true);
    j.update(morse_fields(d.word()));
    j["input"] = d.path;
    emit(out, j);
  } else {
    out << ring::render(z) << "\n";
  }
  return kOk;
}

std::string routing_text(const std::vector<diagram::Routing>& r) {
  std::string s;
  for (auto x : r) s += x == diagram::Routing::Smooth ? 'S' : 'X';
  return s.empty() ? "-" : s;
}

std::string sign_text(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += x > 0 ? '+' : '-';
  return s;
}

int cmd_states(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  statesum::StateSum sum = [&] {
    try {
      return statesum::enumerate_states(d.word());
    } catch (const std::length_error& e) {
      throw InputError(e.what());
    }
  }();
  if (c.format == Format::Json) {
    json j = poly_to_json(sum.total, false);
    j.update(morse_fields(d.word()));
    j["input"] = d.path;
    j["states"] = json::array();
    for (const auto& s : sum.states) {
      json e;
      e["routing"] = routing_text(s.routing);
      e["loop_signs"] = s.loop_sign;
      e["loop_rot"] = s.loop_rot;
      e["weight"] = poly_to_json(s.weight, false);
      j["states"].push_back(e);
    }
    emit(out, j);
  } else {
    for (std::size_t k = 0; k < sum.states.size(); ++k) {
      const auto& s = sum.states[k];
      out << "state " << k + 1 << ": routing " << routing_text(s.routing) << ", loops " << sign_text(s.loop_sign)
          << ", weight " << ring::render(s.weight) << "\n";
    }
    out << "states: " << sum.states.size() << "\n";
    out << "total: " << ring::render(sum.total) << "\n";
  }
  return kOk;
}

int cmd_skein(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() != 3) throw InputError("skein expects three Morse files: K+ K- K0");
  Diagram kp = load(c.inputs[0]), km = load(c.inputs[1]), k0 = load(c.inputs[2]);
  statesum::SkeinResult r = [&] {
    try {
      return statesum::skein_check(kp.word(), km.word(), k0.word());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("skein inputs: ") + e.what());
    }
  }();
  if (c.format == Format::Json) {
    json j;
    j["input"] = c.inputs;
    j["w_plus"] = poly_to_json(r.w_plus, false);
    j["w_minus"] = poly_to_json(r.w_minus, false);
    j["w_zero"] = poly_to_json(r.w_zero, false);
    j["w_identity"] = r.w_identity;
    j["z_identity"] = r.z_identity;
    j["holds"] = r.holds();
    emit(out, j);
  } else {
    out << "W(K+) = " << ring::render(r.w_plus) << "\n";
    out << "W(K-) = " << ring::render(r.w_minus) << "\n";
    out << "W(K0) = " << ring::render(r.w_zero) << "\n";
    out << "W(K+) - W(K-) = z W(K0): " << (r.w_identity ? "holds" : "FAILS") << "\n";
    out << "normalized Z form: " << (r.z_identity ? "holds" : "FAILS") << "\n";
  }
  return r.holds() ? kOk : kFailed;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
  Diagram d = load(single_input(c));
  auto cmp = statesum::compare_zg_detail(d.code());
  if (c.format == Format::Json) {
    json j;
    j["input"] = d.path;
    j["z"] = poly_to_json(cmp.z, true);
    j["g"] = poly_to_json(cmp.g, true);
    j["equal"] = cmp.equal;
    emit(out, j);
  } else {
    out << "Z = " << ring::render(cmp.z) << "\n";
    out << "G = " << ring::render(cmp.g) << "\n";
    out << (cmp.equal ? "equal" : "DIFFERENT") << "\n";
  }
  return cmp.equal ? kOk : kFailed;
}

bioq::TensorElement load_tensor(const std::string& path) {
  const std::string text = read_file(path);
  ring::PolyMatrix m = [&] {
    try {
      return ring::parse_grid(text, VarPair::SigmaTau);
    } catch (const ParseError& e) {
      throw e.with_file(path);
    }
  }();
  try {
    return bioq::TensorElement::from_matrix(m);
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

bioq::AlgebraMap named_map(const std::string& name) {
  if (name == "T") return bioq::standard_instance().t;
  if (name == "identity") return bioq::AlgebraMap::identity(2);
  throw InputError("unknown automorphism '" + name + "' (expected T or identity)");
}

int cmd_axioms(const RunConfig& c, std::ostream& out) {
  bioq::Report rep;
  if (!c.instance.empty()) {
    if (c.instance != "standard") throw InputError("unknown instance '" + c.instance + "'");
    if (!c.rho_file.empty() || !c.gamma_file.empty()) throw InputError("--instance excludes --rho and --gamma");
    rep = bioq::check_instance(bioq::standard_instance());
  } else {
    if (c.rho_file.empty()) throw InputError("axioms needs --instance standard or --rho <file>");
    bioq::TensorElement rho = load_tensor(c.rho_file);
    bioq::AlgebraMap u = named_map(c.u), d = named_map(c.d);
    if (rho.n != 2) throw InputError(c.rho_file + ": only 4 x 4 elements of M_2 (x) M_2 are supported");
    std::optional<bioq::TensorElement> rho_inv;
    try {
      rho_inv = bioq::TensorElement{rho.n, ring::inverse(rho.data)};
    } catch (const InexactDivision&) {
      rep.conditions.push_back({"rho invertible", false});
    }
    if (rho_inv) {
      try {
        if (c.gamma_file.empty())
          rep = bioq::check_oriented(rho, *rho_inv, u, d);
        else
          rep = bioq::check_bioriented(rho, *rho_inv, load_tensor(c.gamma_file), u, d);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    rep.interpretation = "A = M_2; U = " + c.u + ", D = " + c.d;
  }
  if (c.format == Format::Json) {
    json j;
    j["interpretation"] = rep.interpretation;
    j["conditions"] = json::array();
    for (const auto& x : rep.conditions) j["conditions"].push_back({{"name", x.name}, {"pass", x.pass}});
    j["cross_references"] = json::array();
    for (const auto& x : rep.cross_references) j["cross_references"].push_back({{"name", x.name}, {"pass", x.pass}});
    j["pass"] = rep.all_pass();
    emit(out, j);
  } else {
    out << bioq::to_text(rep);
  }
  return rep.all_pass() ? kOk : kFailed;
}

// ---- corpus ----

enum class RowStatus { Pass, Fail, Error };

struct Row {
  std::string name;
  RowStatus status = RowStatus::Pass;
  std::vector<std::string> notes;
};

Row check_corpus_file(const fs::path& file) {
  Row row;
  row.name = file.filename().string();
  auto fail = [&](const std::string& note) {
    if (row.status == RowStatus::Pass) row.status = RowStatus::Fail;
    row.notes.push_back(note);
  };
  try {
    Diagram d = load(file.string());
    const bool morse = is_morse_path(file.string());
    std::optional<BiLaurent> g, z, w;
    auto get_g = [&]() -> const BiLaurent& {
      if (!g) g = alexander::gpoly(d.code());
      return *g;
    };
    auto get_z = [&]() -> const BiLaurent& {
      if (!z) z = statesum::zpoly(d.word());
      return *z;
    };
    auto get_w = [&]() -> const BiLaurent& {
      if (!w) w = statesum::evaluate_W(d.word());
      return *w;
    };
    if (get_z() == get_g())
      row.notes.push_back("Z = G = " + ring::render(get_g()));
    else
      fail("Z = " + ring::render(get_z()) + " but G = " + ring::render(get_g()));

    fs::path sidecar = file;
    sidecar += ".expected";
    if (!fs::exists(sidecar)) sidecar = fs::path(file).replace_extension(".expected");
    if (fs::exists(sidecar)) {
      std::istringstream lines(read_file(sidecar.string()));
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(lines, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string key = morse ? "zpoly" : "gpoly";
        std::string value = line.substr(first);
        if (auto colon = value.find(':'); colon != std::string::npos) {
          key = value.substr(0, colon);
          value = value.substr(colon + 1);
        }
        if (key != "gpoly" && key != "zpoly" && key != "wpoly")
          throw ParseError("unknown expectation key", line_no, key, sidecar.string());
        const VarPair vars = key == "wpoly" ? VarPair::SigmaTau : VarPair::ST;
        BiLaurent expected = parse_expected(value, vars, sidecar.string(), line_no);
        const BiLaurent& got = key == "gpoly" ? get_g() : key == "zpoly" ? get_z() : get_w();
        if (key != "wpoly") expected = ring::normalize_units(expected);
        if (expected == got)
          row.notes.push_back(key + " matches " + sidecar.filename().string());
        else
          fail(key + " = " + ring::render(got) + ", expected " + ring::render(expected));
      }
    }
  } catch (const ParseError& e) {
    row.status = RowStatus::Error;
    row.notes.push_back(e.what());
  } catch (const std::exception& e) {
    row.status = RowStatus::Error;
    row.notes.push_back(e.what());
  }
  return row;
}

int cmd_corpus(const RunConfig& c, std::ostream& out) {
  if (c.inputs.size() > 1) throw InputError("corpus takes at most one directory");
  const std::string dir = c.inputs.empty() ? default_corpus_dir() : c.inputs.front();
  if (!fs::is_directory(dir)) throw InputError(dir + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".gauss" || ext == ".morse")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<std::future<Row>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, check_corpus_file, f));
  std::vector<Row> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  int code = kOk;
  std::size_t passed = 0;
  for (const Row& r : rows) {
    if (r.status == RowStatus::Pass) ++passed;
    if (r.status == RowStatus::Error) code = kInputError;
    if (r.status == RowStatus::Fail && code == kOk) code = kFailed;
  }
  auto label = [](RowStatus s) { return s == RowStatus::Pass ? "PASS" : s == RowStatus::Fail ? "FAIL" : "ERROR"; };
  if (c.format == Format::Json) {
    json j;
    j["directory"] = dir;
    j["rows"] = json::array();
    for (const Row& r : rows) j["rows"].push_back({{"file", r.name}, {"status", label(r.status)}, {"notes", r.notes}});
    j["passed"] = passed;
    j["total"] = rows.size();
    emit(out, j);
  } else {
    for (const Row& r : rows) {
      out << label(r.status) << "  " << r.name << "\n";
      for (const auto& n : r.notes) out << "      " << n << "\n";
    }
    out << passed << "/" << rows.size() << " passed\n";
  }
  return code;
}

}  // namespace

std::string default_corpus_dir() {
  if (const char* env = std::getenv("VIRTLINK_CORPUS"); env && *env) return env;
  return VIRTLINK_DEFAULT_CORPUS;
}

json poly_to_json(const BiLaurent& p, bool normalized) {
  json j;
  j["vars"] = p.vars() == VarPair::ST ? "s,t" : "sigma,tau";
  j["terms"] = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coeffs = json::array();
    for (std::size_t k = 0; k < 4; ++k) coeffs.push_back(coefficient_json(c[k]));
    j["terms"].push_back(json::array({json::array({e.m, e.n}), coeffs}));
  }
  j["normalized"] = normalized;
  j["text"] = ring::render(p);
  return j;
}

BiLaurent poly_from_json(const json& j) {
  const std::string vars = j.at("vars").get<std::string>();
  if (vars != "s,t" && vars != "sigma,tau") throw std::invalid_argument("unknown variable pair '" + vars + "'");
  BiLaurent::TermMap terms;
  for (const auto& t : j.at("terms")) {
    const auto& e = t.at(0);
    const auto& c = t.at(1);
    terms[{e.at(0).get<int>(), e.at(1).get<int>()}] =
        ring::CycloCoeff(coefficient_from_json(c.at(0)), coefficient_from_json(c.at(1)), coefficient_from_json(c.at(2)),
                         coefficient_from_json(c.at(3)));
  }
  return BiLaurent::from_terms(vars == "s,t" ? VarPair::ST : VarPair::SigmaTau, terms);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& c = config.command;
    if (c == "gpoly") return cmd_gpoly(config, out);
    if (c == "minors") return cmd_minors(config, out);
    if (c == "biquandle-check") return cmd_biquandle(config, out);
    if (c == "wpoly") return cmd_wpoly(config, out);
    if (c == "zpoly") return cmd_zpoly(config, out);
    if (c == "states") return cmd_states(config, out);
    if (c == "skein") return cmd_skein(config, out);
    if (c == "compare") return cmd_compare(config, out);
    if (c == "axioms") return cmd_axioms(config, out);
    if (c == "corpus") return cmd_corpus(config, out);
    err << "error: unknown command '" << c << "'\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace virtlink::cli

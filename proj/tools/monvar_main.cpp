// command line front end for the word/variety toolkit

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monvar/json_io.hpp"
#include "monvar/monvar.hpp"

namespace fs = std::filesystem;
using namespace monvar;

namespace {

std::string cache_dir() {
  if (const char* env = std::getenv("MONVAR_CACHE_DIR")) return env;
  return ".cache";
}

// cache key: hash of the sorted, normalized word list
std::string cache_key(const std::set<Word>& ws) {
  std::string norm;
  for (const Word& w : ws) norm += format_word(w) + "\n";
  std::ostringstream os;
  os << std::hex << std::hash<std::string>{}(norm) << "-" << ws.size();
  return os.str();
}

FiniteMonoid cached_build_sw(const std::set<Word>& ws) {
  fs::path path = fs::path(cache_dir()) / ("sw-" + cache_key(ws) + ".json");
  if (fs::exists(path)) {
    std::ifstream in(path);
    json j;
    in >> j;
    try {
      return j.get<FiniteMonoid>();
    } catch (const std::exception&) {
      // fall through to a rebuild on any corrupt cache entry
    }
  }
  FiniteMonoid m = build_sw(ws);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (!ec) {
    std::ofstream out(path);
    out << json(m).dump(2) << "\n";
  }
  return m;
}

IdentitySystem load_system(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open identity file: " + file);
  IdentitySystem s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    Identity id = parse_identity(line);
    if (id.name.empty()) id.name = "line" + std::to_string(lineno);
    s.add(std::move(id));
  }
  return s;
}

void print_system(const IdentitySystem& s, bool as_json) {
  if (as_json) {
    std::cout << json(s.identities).dump(2) << "\n";
    return;
  }
  for (const Identity& id : s.identities) {
    if (!id.name.empty()) std::cout << id.name << ": ";
    std::cout << format_identity(id) << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"word problems and identity deciders for a family of monoid varieties"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine readable output");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "full decomposition of a word");
  std::string decompose_word;
  decompose_cmd->add_option("word", decompose_word)->required();

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "decide an identity in a variety");
  std::string decide_variety, decide_identity;
  decide_cmd->add_option("--variety", decide_variety)->required();
  decide_cmd->add_option("--identity", decide_identity)->required();

  // sw
  auto* sw_cmd = app.add_subcommand("sw", "Rees quotient monoid of a word set");
  std::string sw_action;
  std::vector<std::string> sw_words;
  sw_cmd->add_option("action", sw_action)->required()->check(CLI::IsMember({"build", "table"}));
  sw_cmd->add_option("words", sw_words)->required();

  // check
  auto* check_cmd = app.add_subcommand("check", "identity satisfaction in a monoid");
  std::string check_monoid, check_identity;
  std::vector<std::string> check_words;
  check_cmd->add_option("--monoid", check_monoid, "monoid table JSON file");
  check_cmd->add_option("--sw", check_words, "words generating an S(W) monoid");
  check_cmd->add_option("--identity", check_identity)->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "word families and identity systems");
  std::string gen_what;
  std::vector<std::string> gen_args;
  std::vector<std::string> gen_zeta;
  std::size_t gen_cap = 5000;
  gen_cmd->add_option("what", gen_what)
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "e", "f", "basis", "sigmaK"}));
  gen_cmd->add_option("args", gen_args);
  gen_cmd->add_option("--zeta", gen_zeta, "swap:<i> entries for the b-variant");
  gen_cmd->add_option("--cap", gen_cap, "letter count cap");

  // derive
  auto* derive_cmd = app.add_subcommand("derive", "bounded derivation search");
  std::string derive_system, derive_identity;
  std::size_t derive_depth = 8, derive_states = 100000;
  std::size_t derive_max_len = 0;
  derive_cmd->add_option("--system", derive_system)->required();
  derive_cmd->add_option("--identity", derive_identity)->required();
  derive_cmd->add_option("--depth", derive_depth);
  derive_cmd->add_option("--max-len", derive_max_len);
  derive_cmd->add_option("--max-states", derive_states);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance battery");
  bool verify_quick = false, verify_full = false;
  verify_cmd->add_flag("--quick", verify_quick);
  verify_cmd->add_flag("--full", verify_full);

  CLI11_PARSE(app, argc, argv);

  if (decompose_cmd->parsed()) {
    FullDecomposition fd = full_decompose(parse_word(decompose_word));
    if (as_json)
      std::cout << json(fd).dump(2) << "\n";
    else
      std::cout << format_full_decomposition(fd) << "\n";
    return 0;
  }

  if (decide_cmd->parsed()) {
    auto v = parse_variety(decide_variety);
    if (!v) {
      std::cerr << "unknown variety: " << decide_variety << "\n";
      return 2;
    }
    Identity id = parse_identity(decide_identity);
    Verdict verdict = holds_in(*v, id);
    if (as_json) {
      json j = verdict_to_json(verdict);
      if (verdict.witness) {
        const FiniteMonoid& m = *v == VarietyId::D2 ? oracle_d2() : oracle_m();
        j["witness"] = assignment_to_json(m, *verdict.witness);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (verdict.holds ? "holds" : "fails") << " ("
                << (verdict.method == DecisionMethod::Criterion ? "criterion"
                                                                : "finite oracle")
                << ")\n";
    }
    return 0;
  }

  if (sw_cmd->parsed()) {
    std::set<Word> ws;
    for (const std::string& t : sw_words) ws.insert(parse_word(t));
    FiniteMonoid m = cached_build_sw(ws);
    if (sw_action == "build") {
      if (as_json) {
        json j;
        j["size"] = m.size();
        j["identity"] = m.names[m.identity_index];
        j["zero"] = m.zero_index ? json(m.names[*m.zero_index]) : json();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << m.size() << " elements\n";
      }
    } else {
      if (as_json) {
        std::cout << json(m).dump(2) << "\n";
      } else {
        for (std::size_t a = 0; a < m.size(); ++a) {
          for (std::size_t b = 0; b < m.size(); ++b)
            std::cout << (b ? " " : "") << m.names[m.mul(a, b)];
          std::cout << "\n";
        }
      }
    }
    return 0;
  }

  if (check_cmd->parsed()) {
    FiniteMonoid m;
    if (!check_monoid.empty()) {
      std::ifstream in(check_monoid);
      if (!in) {
        std::cerr << "cannot open " << check_monoid << "\n";
        return 2;
      }
      json j;
      in >> j;
      m = j.get<FiniteMonoid>();
    } else if (!check_words.empty()) {
      std::set<Word> ws;
      for (const std::string& t : check_words) ws.insert(parse_word(t));
      m = cached_build_sw(ws);
    } else {
      std::cerr << "either --monoid or --sw is required\n";
      return 2;
    }
    Identity id = parse_identity(check_identity);
    SatResult r = satisfies_identity(m, id);
    if (as_json) {
      json j;
      j["holds"] = r.holds;
      if (r.witness) j["witness"] = assignment_to_json(m, *r.witness);
      std::cout << j.dump(2) << "\n";
    } else if (r.holds) {
      std::cout << "holds\n";
    } else {
      std::cout << "fails, witness:";
      for (const auto& [l, e] : *r.witness)
        std::cout << " " << format_letter(l) << "->" << m.names[e];
      std::cout << "\n";
    }
    return r.holds ? 0 : 1;
  }

  if (gen_cmd->parsed()) {
    auto arg_int = [&gen_args](std::size_t i) {
      if (i >= gen_args.size()) throw std::runtime_error("missing numeric argument");
      return std::stoi(gen_args[i]);
    };
    auto print_word = [&as_json](const Word& w) {
      if (as_json)
        std::cout << json(w).dump() << "\n";
      else
        std::cout << format_word(w) << "\n";
    };
    if (gen_what == "a") {
      print_word(build_a(arg_int(0), gen_cap));
    } else if (gen_what == "b") {
      int n = arg_int(0);
      std::vector<bool> swaps(static_cast<std::size_t>(n), false);
      for (const std::string& z : gen_zeta) {
        if (z.rfind("swap:", 0) != 0)
          throw std::runtime_error("expected --zeta swap:<i>");
        int i = std::stoi(z.substr(5));
        if (i < 0 || i >= n) throw std::runtime_error("zeta index out of range");
        swaps[static_cast<std::size_t>(i)] = true;
      }
      print_word(build_b_variant(n, swaps));
    } else if (gen_what == "c") {
      print_word(build_c(arg_int(0), gen_cap));
    } else if (gen_what == "d") {
      print_word(build_d(arg_int(0), arg_int(1), gen_cap));
    } else if (gen_what == "e") {
      print_word(build_e(arg_int(0)));
    } else if (gen_what == "f") {
      print_word(build_f(arg_int(0)));
    } else if (gen_what == "basis") {
      if (gen_args.empty()) throw std::runtime_error("missing variety name");
      auto v = parse_variety(gen_args[0]);
      if (!v) throw std::runtime_error("unknown variety: " + gen_args[0]);
      print_system(variety_basis(*v), as_json);
    } else if (gen_what == "sigmaK") {
      std::set<int> K;
      if (!gen_args.empty()) {
        std::stringstream ss(gen_args[0]);
        std::string part;
        while (std::getline(ss, part, ',')) K.insert(std::stoi(part));
      }
      print_system(sigma_K(K, gen_args.size() > 1 ? std::stoi(gen_args[1]) : 3,
                           gen_cap),
                   as_json);
    }
    return 0;
  }

  if (derive_cmd->parsed()) {
    IdentitySystem system = load_system(derive_system);
    Identity goal = parse_identity(derive_identity);
    std::size_t max_len = derive_max_len;
    if (max_len == 0) max_len = std::max(goal.lhs.size(), goal.rhs.size()) + 2;
    DeriveResult r = derives(system, goal, derive_depth, max_len, derive_states);
    if (as_json) {
      json j;
      j["found"] = r.found();
      j["states_explored"] = r.states_explored;
      if (r.found()) j["trace"] = *r.trace;
      std::cout << j.dump(2) << "\n";
    } else if (r.found()) {
      std::cout << format_word(r.trace->source) << "\n";
      for (const DerivationStep& s : r.trace->steps)
        std::cout << "  =[" << s.identity_name << " " << to_string(s.direction)
                  << " @" << s.match.prefix.size() << "]= " << format_word(s.result)
                  << "\n";
    } else {
      std::cout << "exhausted after " << r.states_explored << " states\n";
    }
    return r.found() ? 0 : 1;
  }

  if (verify_cmd->parsed()) {
    VerifyMode mode = verify_full && !verify_quick ? VerifyMode::Full : VerifyMode::Quick;
    VerifyReport report = run_verify(mode);
    if (as_json) {
      json j = json::array();
      for (const CheckResult& c : report.checks)
        j.push_back({{"name", c.name},
                     {"status", c.status},
                     {"details", c.details},
                     {"seconds", c.seconds}});
      std::cout << j.dump(2) << "\n";
    } else {
      for (const CheckResult& c : report.checks)
        std::cout << c.status << " " << c.name << " (" << c.seconds << "s) "
                  << c.details << "\n";
    }
    return report.all_passed() ? 0 : 1;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

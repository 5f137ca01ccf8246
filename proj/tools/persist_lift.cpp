// persist-lift: command line front end for the decomposition library.
//
// Exit codes: 0 pass or fully certified, 1 invalid input or failure,
// 2 undecided.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "plift/barcode.hpp"
#include "plift/decompose.hpp"
#include "plift/extension.hpp"
#include "plift/fixtures.hpp"
#include "plift/hom.hpp"
#include "plift/io.hpp"
#include "plift/report.hpp"
#include "plift/theorem.hpp"
#include "plift/witness.hpp"

namespace {

using nlohmann::json;
using namespace plift;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;

struct Common {
  std::string instance;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  bool timing = false;
};

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Undecided: return kExitUndecided;
  }
  return kExitFail;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
  f << text;
}

json header(const std::string& command, const Common& c) {
  json j{{"command", command}};
  if (!c.instance.empty()) j["instance"] = std::filesystem::path(c.instance).filename().string();
  return j;
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void stamp(json& j) const {
    if (!on_) return;
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    j["timing_ms"] = ms;
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose generalized persistence modules over local Artinian F_p-algebras"};
  app.require_subcommand(1);

  Common c;
  std::string name, other;
  bool text = false, list = false;
  std::size_t jobs = 1, count = 200, max_vertices = 5;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Seed for the randomized splitting and matching steps")->capture_default_str();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write the report here instead of stdout");
    sub->add_flag("--timing", c.timing, "Include wall-clock time in the report");
  };

  auto* validate = app.add_subcommand("validate", "Load and validate an instance file");
  validate->add_option("instance", c.instance)->required();

  auto* decomp = app.add_subcommand("decompose", "Decompose a module into certified summands");
  decomp->add_option("instance", c.instance)->required();
  decomp->add_option("module", name)->required();
  add_seed(decomp);
  add_out(decomp);

  auto* endring = app.add_subcommand("endring", "Print a k-basis and multiplication table of End(M)");
  endring->add_option("instance", c.instance)->required();
  endring->add_option("module", name)->required();
  add_out(endring);

  auto* hom = app.add_subcommand("hom", "Print a k-basis of Hom(M, N)");
  hom->add_option("instance", c.instance)->required();
  hom->add_option("source", name)->required();
  hom->add_option("target", other)->required();
  add_out(hom);

  auto* chain = app.add_subcommand("chain", "List the small-extension chain R -> ... -> k");
  chain->add_option("instance", c.instance)->required();
  add_out(chain);

  auto* bar = app.add_subcommand("barcode", "Interval decomposition of a module over k on a linear A_n");
  bar->add_option("instance", c.instance)->required();
  bar->add_option("module", name)->required();
  bar->add_flag("--text", text, "Print only the text rendering");
  add_seed(bar);
  add_out(bar);

  auto* verify = app.add_subcommand("verify-theorem", "Decompose a lift and match it against its base");
  verify->add_option("instance", c.instance)->required();
  verify->add_option("lift", name)->required();
  add_seed(verify);
  add_out(verify);

  auto* battery = app.add_subcommand("battery", "Run the randomized lift-witness battery");
  battery->add_option("--count", count, "Number of instances")->capture_default_str();
  battery->add_option("--jobs", jobs, "Worker threads; output does not depend on this")->capture_default_str();
  battery->add_option("--max-vertices", max_vertices, "Largest A_n")->capture_default_str()->check(CLI::Range(1, 12));
  add_seed(battery);
  add_out(battery);

  auto* fixtures = app.add_subcommand("fixtures", "Write the built-in fixtures as instance files");
  fixtures->add_option("--out", c.out, "Directory to write into")->capture_default_str();
  fixtures->add_flag("--list", list, "Only list fixture names");

  CLI11_PARSE(app, argc, argv);

  try {
    const Timer timer(c.timing);

    if (*validate) {
      const Instance inst = load_instance(c.instance);
      std::cout << "valid: R of length " << inst.algebra->length() << ", " << inst.quiver->vertex_count()
                << " vertices, " << inst.modules.size() << " modules, " << inst.lifts.size() << " lifts\n";
      return kExitPass;
    }

    if (*decomp) {
      const Instance inst = load_instance(c.instance);
      const DecompositionReport report = decompose(inst.module(name), c.seed);
      json j = header("decompose", c);
      j["module"] = name;
      j["seed"] = c.seed;
      j.update(report_to_json(report));
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return report.verdict == Verdict::Pass ? kExitPass : kExitUndecided;
    }

    if (*endring) {
      const Instance inst = load_instance(c.instance);
      const ModulePtr& m = inst.module(name);
      json j = header("endring", c);
      j["module"] = name;
      j.update(end_algebra_to_json(end_algebra(m)));
      j["scalar"] = !m->is_zero() && end_is_scalar(m);
      j["length"] = m->algebra()->length();
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return kExitPass;
    }

    if (*hom) {
      const Instance inst = load_instance(c.instance);
      const auto basis = hom_basis(inst.module(name), inst.module(other));
      json j = header("hom", c);
      j["source"] = name;
      j["target"] = other;
      j["dimension"] = basis.size();
      j["basis"] = transforms_to_json(basis);
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return kExitPass;
    }

    if (*chain) {
      const Instance inst = load_instance(c.instance);
      const auto steps = extension_chain(inst.algebra);
      json j = header("chain", c);
      j["length"] = inst.algebra->length();
      j["steps"] = steps.size();
      j["chain"] = chain_to_json(steps);
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return kExitPass;
    }

    if (*bar) {
      const Instance inst = load_instance(c.instance);
      const Barcode b = barcode(inst.module(name), c.seed);
      if (text) {
        emit(render_barcode(b), c.out);
        return kExitPass;
      }
      json j = header("barcode", c);
      j["module"] = name;
      j["seed"] = c.seed;
      j.update(barcode_to_json(b));
      j["text"] = render_barcode(b);
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return kExitPass;
    }

    if (*verify) {
      const Instance inst = load_instance(c.instance);
      const DecompositionReport report = verify_theorem(inst.lift(name).witness, c.seed);
      json j = header("verify-theorem", c);
      j["lift"] = name;
      j["seed"] = c.seed;
      j.update(report_to_json(report));
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return exit_code(report.verdict);
    }

    if (*battery) {
      BatteryOptions opts;
      opts.count = count;
      opts.seed = c.seed;
      opts.jobs = jobs;
      opts.witness.max_vertices = max_vertices;
      const auto outcomes = run_battery(opts);
      std::size_t passed = 0;
      for (const auto& o : outcomes) passed += o.passed();
      json j = header("battery", c);
      j["seed"] = c.seed;
      j["count"] = count;
      j["passed"] = passed;
      j["verdict"] = passed == count ? "pass" : "fail";
      j["instances"] = battery_to_json(outcomes);
      timer.stamp(j);
      emit(dump_json(j), c.out);
      return passed == count ? kExitPass : kExitFail;
    }

    if (*fixtures) {
      for (const std::string& f : fixture_names()) {
        if (list) {
          std::cout << f << "\n";
          continue;
        }
        const std::filesystem::path dir = c.out.empty() ? std::filesystem::path(".") : std::filesystem::path(c.out);
        std::filesystem::create_directories(dir);
        emit(save_instance(fixture(f)), (dir / (f + ".json")).string());
        std::cout << (dir / (f + ".json")).string() << "\n";
      }
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitFail;
}

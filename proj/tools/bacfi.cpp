// bacfi: command-line front end for divide monodromies on Ba'cfi-tiled surfaces.

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bacfi/builtin.hpp"
#include "bacfi/divide.hpp"
#include "bacfi/error.hpp"
#include "bacfi/report.hpp"
#include "bacfi/surface.hpp"
#include "bacfi/traintrack.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInapplicable = 2;
constexpr int kInternal = 3;

struct Outcome {
  std::string out;
  std::string err;
  int code = kOk;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw bacfi::Error(bacfi::ErrorKind::MalformedDocument, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// Runs one analysis, mapping failures onto exit codes.
Outcome guarded(const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const bacfi::Error& e) {
    return {"", std::string("error: ") + e.what() + "\n", bacfi::is_inapplicable(e.kind()) ? kInapplicable : kInvalid};
  } catch (const std::exception& e) {
    return {"", std::string("internal error: ") + e.what() + "\n", kInternal};
  }
}

std::string emit(const bacfi::Json& report, bool json) {
  return json ? report.dump(2) + "\n" : bacfi::render_text(report);
}

// Runs `analyse` over every input, possibly concurrently, printing results in
// input order. The exit code is the most severe one seen.
int run_batch(std::vector<std::string> inputs, int jobs, bool json,
              const std::function<Outcome(const std::string& document, bool json)>& analyse) {
  if (inputs.empty()) inputs.push_back("-");
  // stdin can only be read once, and before any worker starts
  std::vector<std::string> documents(inputs.size());
  std::vector<Outcome> failures(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    try {
      documents[i] = read_input(inputs[i]);
    } catch (const bacfi::Error& e) {
      failures[i] = {"", std::string("error: ") + e.what() + "\n", kInvalid};
    }
  }

  std::vector<Outcome> results(inputs.size());
  auto work = [&](std::size_t i) {
    results[i] = failures[i].code != kOk ? failures[i] : guarded([&] { return analyse(documents[i], json); });
  };
  const std::size_t width = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t start = 0; start < inputs.size(); start += width) {
    std::vector<std::future<void>> running;
    for (std::size_t i = start; i < std::min(inputs.size(), start + width); ++i) {
      running.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred, work, i));
    }
    for (auto& f : running) f.get();
  }

  int code = kOk;
  const bool many = inputs.size() > 1;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (many && !json) std::cout << "== " << inputs[i] << " ==\n";
    std::cout << results[i].out;
    if (!results[i].err.empty()) std::cerr << (many ? inputs[i] + ": " : "") << results[i].err;
    code = std::max(code, results[i].code);
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divide monodromies of Ba'cfi-tiled surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  int jobs = 1;
  app.add_flag("--json", json, "emit JSON reports (schema bacfi-report/1)");
  app.add_option("-j,--jobs", jobs, "analyse several inputs concurrently")->check(CLI::PositiveNumber);

  std::vector<std::string> inputs;
  auto surface_command = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", inputs, "surface documents ('-' or nothing for stdin)");
    return sub;
  };

  auto* validate = surface_command("validate", "check a surface document");
  auto* info = surface_command("info", "cylinders, vertex classes and genus");
  auto* mono = surface_command("monodromy", "full monodromy report");
  auto* orbifold = surface_command("orbifold", "base orbifold and divide statistics");
  auto* divide = surface_command("divide", "emit the fat graph (divide document)");
  auto* torus = surface_command("torus-word", "positive XY word of a genus-one monodromy");
  auto* certificate = surface_command("certificate", "train-track certificate (stretch factor >= 5/2)");

  auto* from_divide = app.add_subcommand("from-divide", "rebuild the surface from a divide document");
  from_divide->add_option("inputs", inputs, "divide documents ('-' or nothing for stdin)");

  auto* classify = app.add_subcommand("classify", "root location of an integer polynomial");
  std::string coeffs;
  classify->add_option("--coeffs", coeffs, "comma separated coefficients, lowest degree first");
  classify->add_option("inputs", inputs, "JSON array files");

  auto* example = app.add_subcommand("example", "print a builtin surface");
  std::string example_name;
  std::vector<int> example_args;
  int ep = 2, eq = 3, er = 7, es = 2, en = 3;
  example->add_option("name", example_name, "example1 | example2 | example3 | example4 | pingpong")->required();
  example->add_option("args", example_args, "positional parameters (p q r s, q r, or n q r)");
  example->add_option("--p", ep, "example1 p");
  example->add_option("--q", eq, "q");
  example->add_option("--r", er, "r");
  example->add_option("--s", es, "example1 s");
  example->add_option("--n", en, "pingpong n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  using bacfi::Json;
  auto report_runner = [&](Json (*make)(const bacfi::BacfiSurface&)) {
    return run_batch(inputs, jobs, json, [make](const std::string& doc, bool as_json) {
      return Outcome{emit(make(bacfi::parse_surface(doc)), as_json), "", kOk};
    });
  };

  if (*validate) {
    return run_batch(inputs, jobs, json, [](const std::string& doc, bool as_json) {
      const auto s = bacfi::parse_surface(doc);
      Json j;
      j["schema"] = bacfi::kReportSchema;
      j["kind"] = "validate";
      j["valid"] = true;
      j["squares"] = s.size();
      return Outcome{as_json ? j.dump(2) + "\n" : "valid: " + std::to_string(s.size()) + " squares\n", "", kOk};
    });
  }
  if (*info) return report_runner(&bacfi::info_report);
  if (*mono) return report_runner(&bacfi::monodromy_report);
  if (*orbifold) return report_runner(&bacfi::orbifold_report);
  if (*torus) return report_runner(&bacfi::torus_word_report);
  if (*certificate) {
    return run_batch(inputs, jobs, json, [](const std::string& doc, bool as_json) {
      const auto s = bacfi::parse_surface(doc);
      const bacfi::ConeCertificate cert = bacfi::cone_certificate(s);
      Outcome o{emit(bacfi::certificate_report(s), as_json), "", kOk};
      if (!cert.applicable) {
        o.code = kInapplicable;
        o.err = "inapplicable: ";
        for (std::size_t i = 0; i < cert.reasons.size(); ++i) o.err += (i ? "; " : "") + cert.reasons[i];
        o.err += "\n";
      }
      return o;
    });
  }
  if (*divide) {
    return run_batch(inputs, jobs, json, [](const std::string& doc, bool) {
      const auto dv = bacfi::surface_to_divide(bacfi::parse_surface(doc));
      return Outcome{bacfi::divide_to_json(dv).dump(2) + "\n", "", kOk};
    });
  }
  if (*from_divide) {
    return run_batch(inputs, jobs, json, [](const std::string& doc, bool) {
      return Outcome{bacfi::serialize_surface(bacfi::divide_to_surface(bacfi::parse_divide(doc))), "", kOk};
    });
  }
  if (*classify) {
    if (!coeffs.empty()) {
      const Outcome o = guarded([&] {
        return Outcome{emit(bacfi::classify_report(bacfi::parse_coefficients(coeffs)), json), "", kOk};
      });
      std::cout << o.out;
      std::cerr << o.err;
      return o.code;
    }
    return run_batch(inputs, jobs, json, [](const std::string& doc, bool as_json) {
      nlohmann::json arr;
      try {
        arr = nlohmann::json::parse(doc);
      } catch (const nlohmann::json::parse_error& e) {
        throw bacfi::Error(bacfi::ErrorKind::MalformedDocument, e.what());
      }
      if (!arr.is_array()) throw bacfi::Error(bacfi::ErrorKind::MalformedDocument, "expected a JSON array of coefficients");
      std::string csv;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer() && !arr[i].is_string()) {
          throw bacfi::Error(bacfi::ErrorKind::MalformedDocument, "coefficients must be integers");
        }
        csv += (i ? "," : "") + (arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump());
      }
      return Outcome{emit(bacfi::classify_report(bacfi::parse_coefficients(csv)), as_json), "", kOk};
    });
  }
  if (*example) {
    const Outcome o = guarded([&]() -> Outcome {
      auto pick = [&](std::size_t i, int fallback) { return i < example_args.size() ? example_args[i] : fallback; };
      const bool q_default = !example->count("--q");
      const bool r_default = !example->count("--r");
      bacfi::BacfiSurface surface = [&] {
        if (example_name == "example1") return bacfi::builtin::example1(pick(0, ep), pick(1, eq), pick(2, er), pick(3, es));
        if (example_name == "example2") return bacfi::builtin::example2();
        if (example_name == "example3") return bacfi::builtin::example3(pick(0, eq), pick(1, er));
        if (example_name == "example4") return bacfi::builtin::example4(pick(0, eq), pick(1, er));
        if (example_name == "pingpong") {
          return bacfi::builtin::pingpong(pick(0, en), pick(1, q_default ? 6 : eq), pick(2, r_default ? 16 : er));
        }
        throw bacfi::Error(bacfi::ErrorKind::MalformedDocument, "unknown example '" + example_name + "'");
      }();
      return {bacfi::serialize_surface(surface), "", kOk};
    });
    std::cout << o.out;
    std::cerr << o.err;
    return o.code;
  }
  return kInvalid;
}

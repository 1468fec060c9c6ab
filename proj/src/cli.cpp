/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The vnnlib Authors
 */

#include "vnnlib/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "vnnlib/assignment.hpp"
#include "vnnlib/ast_json.hpp"
#include "vnnlib/evaluator.hpp"
#include "vnnlib/io.hpp"
#include "vnnlib/mini/theory.hpp"
#include "vnnlib/real/theory.hpp"
#include "vnnlib/report.hpp"
#include "vnnlib/syntax.hpp"
#include "vnnlib/typer.hpp"

namespace vnnlib::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string location(const std::string& path, const Span& span) {
  return path + ":" + std::to_string(span.line) + ":" + std::to_string(span.column);
}

class Runner {
 public:
  Runner(const Invocation& inv, std::ostream& out, std::ostream& err) : inv_(inv), out_(out), err_(err) {}

  int run() {
    if (inv_.command == "version") {
      out_ << "vnnlib " << kVersion << " (query language 2.0)\n";
      return kSuccess;
    }
    try {
      if (inv_.command != "parse" && inv_.command != "check" && inv_.command != "eval" && inv_.command != "search") {
        throw Usage("unknown command '" + inv_.command + "'");
      }
      if (inv_.command == "eval" && !inv_.assignmentPath) throw Usage("eval needs --assignment");
      if (inv_.command == "parse" && !inv_.networks.empty()) throw Usage("parse takes no --network bindings");

      std::string source = readFile(inv_.queryPath);
      Query query = parseQuery(source);
      if (inv_.command == "parse") return parsed(query);
      if (inv_.real) return typed(real::wrapTheory(mini::MiniTheory{}), query);
      return typed(mini::MiniTheory{}, query);
    } catch (const Usage& e) {
      return formatError(std::string("usage: ") + e.what());
    } catch (const FileError& e) {
      return formatError(e.what());
    } catch (const SyntaxError& e) {
      err_ << location(inv_.queryPath, e.span()) << ": " << e.kindName() << ": " << e.what() << "\n";
      if (inv_.json) out_ << report::syntaxError(inv_.command, e).dump(2) << "\n";
      return kParseError;
    } catch (const TypeError& e) {
      err_ << location(inv_.queryPath, e.span()) << ": type error [" << codeName(e.code()) << "]: " << e.what()
           << "\n";
      if (inv_.json) out_ << report::typeError(inv_.command, e).dump(2) << "\n";
      return kTypeError;
    } catch (const mini::ModelFormatError& e) {
      return formatError(std::string("model format error: ") + e.what());
    } catch (const AssignmentFormatError& e) {
      return formatError(std::string("assignment format error: ") + e.what());
    } catch (const std::exception& e) {
      return formatError(std::string("error: ") + e.what());
    }
  }

 private:
  int formatError(const std::string& message) {
    err_ << message << "\n";
    if (inv_.json) out_ << report::formatError(inv_.command, message).dump(2) << "\n";
    return kFormatError;
  }

  int parsed(const Query& query) {
    if (inv_.astJson) {
      out_ << toJson(query).dump(2) << "\n";
    } else if (inv_.json) {
      out_ << report::ok("parse").dump(2) << "\n";
    } else {
      out_ << "OK\n";
    }
    return kSuccess;
  }

  template <class T>
  ModelMap<T> loadModels() {
    ModelMap<T> models;
    for (const auto& binding : inv_.networks) {
      auto eq = binding.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == binding.size()) {
        throw Usage("--network expects name=path, got '" + binding + "'");
      }
      std::string name = binding.substr(0, eq);
      if (models.count(name) != 0) throw Usage("network '" + name + "' is bound twice");
      try {
        models.emplace(name, mini::MiniModel::load(binding.substr(eq + 1)));
      } catch (const mini::ModelFormatError& e) {
        throw mini::ModelFormatError(e.path(), binding.substr(eq + 1) + ": " + e.what());
      }
    }
    return models;
  }

  template <class T>
  int typed(const T& theory, const Query& query) {
    typeQuery(query, theory);
    if (inv_.command == "check" && inv_.networks.empty()) return okReport("check");

    auto models = loadModels<T>();
    checkModels(query, models, theory);
    if (inv_.command == "check") return okReport("check");

    if (inv_.command == "search") return search(theory, query, models);

    auto assignment = parseAssignment(readFile(*inv_.assignmentPath), theory);
    checkAssignment(query, assignment, theory);
    Verdict verdict = evalQuery(query, models, assignment, theory);
    if (inv_.json) {
      out_ << report::verdict(verdict).dump(2) << "\n";
    } else {
      out_ << (verdict.satisfied ? "SATISFIED-BY-WITNESS" : "VIOLATED") << "\n";
      for (std::size_t i = 0; i < verdict.perAssertion.size(); ++i) {
        const auto& [span, holds] = verdict.perAssertion[i];
        out_ << "assert " << i + 1 << " at " << span.line << ":" << span.column << ": " << (holds ? "true" : "false")
             << "\n";
      }
    }
    return verdict.satisfied ? kSuccess : kNegative;
  }

  template <class T>
  int search(const T& theory, const Query& query, const ModelMap<T>& models) {
    auto result = searchWitness(query, models, theory, inv_.samples, inv_.seed);
    if (result.witness) {
      auto witness = assignmentToJson(*result.witness, theory);
      if (inv_.json) {
        out_ << report::searchFound(result.samples, std::move(witness)).dump(2) << "\n";
      } else {
        out_ << "FOUND after " << result.samples << " samples\n" << witness.dump(2) << "\n";
      }
      return kSuccess;
    }
    if (inv_.json) {
      out_ << report::searchUnknown(result.samples).dump(2) << "\n";
    } else {
      out_ << "UNKNOWN: no witness in " << result.samples
           << " samples (best-effort search; not a proof of unsatisfiability)\n";
    }
    return kNegative;
  }

  int okReport(std::string_view command) {
    if (inv_.json) {
      out_ << report::ok(command).dump(2) << "\n";
    } else {
      out_ << "OK\n";
    }
    return kSuccess;
  }

  const Invocation& inv_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int runCommand(const Invocation& invocation, std::ostream& out, std::ostream& err) {
  return Runner(invocation, out, err).run();
}

int runMain(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Parse, type-check and evaluate VNN-LIB queries", "vnnlib"};
  app.require_subcommand(1);

  auto addQueryOptions = [&inv](CLI::App* sub, bool models) {
    sub->add_option("query", inv.queryPath, "Query file (.vnnlib)")->required();
    sub->add_flag("--json", inv.json, "Emit a JSON report");
    sub->add_flag("--real", inv.real, "Use the real-valued theory");
    if (models) sub->add_option("--network", inv.networks, "Bind a network to a model file: name=path");
  };

  auto* parse = app.add_subcommand("parse", "Parse a query");
  addQueryOptions(parse, false);
  parse->add_flag("--ast-json", inv.astJson, "Print the syntax tree as JSON");

  auto* check = app.add_subcommand("check", "Type-check a query, and its models when bound");
  addQueryOptions(check, true);

  auto* eval = app.add_subcommand("eval", "Evaluate a query on an input assignment");
  addQueryOptions(eval, true);
  eval->add_option("--assignment", inv.assignmentPath, "Assignment file (.json)")->required();

  auto* search = app.add_subcommand("search", "Sample input assignments looking for a witness");
  addQueryOptions(search, true);
  search->add_option("--samples", inv.samples, "Number of candidates to try")->capture_default_str();
  search->add_option("--seed", inv.seed, "Random seed")->capture_default_str();

  app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    std::ostringstream help;
    app.exit(e, help, help);
    out << help.str();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    app.exit(e, sink, sink);
    err << sink.str();
    return kFormatError;
  }
  inv.command = app.get_subcommands().front()->get_name();
  return runCommand(inv, out, err);
}

}  // namespace vnnlib::cli

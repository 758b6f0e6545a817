/*
   Copyright 2026 The anser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "anser/anser.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "anser: formal series with exact rational exponents.\n"
        "Expressions support + - * /, branch-indexed powers f^(t; n), and\n"
        "calls such as inv(f), D(f), compose(f, g; 0), compinv(f),\n"
        "lagrange(f, a, b), dual(f), esym(n, N), omega(s), embed(k, M)."};

    std::string window = "12";
    double tolerance = 1e-9;
    std::string orientation = "noetherian";
    std::string exponents = "Q";
    std::string emit = "text";

    app.add_option("--window", window, "Truncation window bound (rational p/q)")
        ->capture_default_str();
    app.add_option("--tol", tolerance, "Coefficient tolerance")
        ->capture_default_str();
    app.add_option("--orientation", orientation, "noetherian or artinian")
        ->check(CLI::IsMember({"noetherian", "artinian"}))
        ->capture_default_str();
    app.add_option("--exponents", exponents,
                   "Exponent monoid: Q (rationals) or N (naturals)")
        ->check(CLI::IsMember({"Q", "N"}))
        ->capture_default_str();
    app.add_option("--emit", emit, "Output form: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    app.fallthrough();

    auto* batch = app.add_subcommand("batch", "Execute a script file");
    std::string script;
    batch->add_option("file", script, "Script of newline-separated statements")
        ->required();
    batch->fallthrough();

    auto* repl = app.add_subcommand("repl", "Interactive session");
    repl->fallthrough();

    auto* evalcmd = app.add_subcommand("eval", "Evaluate one expression");
    std::string expression;
    evalcmd->add_option("expression", expression, "Expression text")->required();
    evalcmd->fallthrough();

    CLI11_PARSE(app, argc, argv);

    anser::SessionConfig cfg;
    // Artinian series are exact above the bound, so the default window
    // mirrors to -12 unless one was given explicitly.
    if (app.count("--window") == 0 && orientation == "artinian") window = "-12";
    try {
        cfg.window = anser::exp_from_string(window);
    } catch (const anser::Error& e) {
        std::cerr << "error: bad --window: " << e.what() << "\n";
        return 2;
    }
    cfg.tolerance = tolerance;
    cfg.orientation = orientation == "artinian" ? anser::Orientation::artinian
                                                : anser::Orientation::noetherian;
    cfg.exponents = exponents == "N" ? anser::ExponentMode::naturals
                                     : anser::ExponentMode::rationals;
    if (cfg.tolerance <= 0) {
        std::cerr << "error: tolerance must be positive\n";
        return 2;
    }
    bool emit_json = emit == "json";

    if (batch->parsed()) {
        std::ifstream in(script);
        if (!in) {
            std::cerr << "error: cannot open script '" << script << "'\n";
            return 2;
        }
        return anser::run_batch(in, std::cout, std::cerr, cfg, emit_json);
    }
    if (evalcmd->parsed()) {
        anser::config::set_tolerance(cfg.tolerance);
        anser::Environment env;
        try {
            auto [name, expr] = anser::parse_statement(expression, 1);
            if (!expr) return 0;
            anser::Value v = anser::eval(expr, cfg, env);
            if (emit_json)
                std::cout << anser::value_to_json(v).dump() << "\n";
            else
                std::cout << anser::value_to_text(v) << "\n";
            return 0;
        } catch (const anser::Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
    }
    return anser::run_repl(std::cin, std::cout, std::cerr, cfg, emit_json);
}

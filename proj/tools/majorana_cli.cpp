// Copyright 2026 The majorana-sphere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "majorana/majorana.hpp"

namespace {

using namespace majorana;

struct ProgramSource {
  std::string text;
  std::string file;

  void add_to(CLI::App* cmd) {
    auto* inline_opt = cmd->add_option("--program", text, "gate script text");
    auto* file_opt = cmd->add_option("--program-file", file, "gate script file");
    inline_opt->excludes(file_opt);
    file_opt->excludes(inline_opt);
  }

  std::string load() const {
    if (!file.empty()) return io::read_file(file);
    return text;
  }

  bool given() const { return !text.empty() || !file.empty(); }
};

MoebiusMap compile_program(const ProgramSource& src, bool allow_nonunitary) {
  return script::compile(src.load(), allow_nonunitary);
}

std::vector<std::size_t> parse_dims(const std::string& spec) {
  std::vector<std::size_t> dims;
  auto to_dim = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v < 2) {
      throw CLI::ValidationError("--dims", "expected A..B, A, or a comma list of integers >= 2");
    }
    return static_cast<std::size_t>(v);
  };
  if (const auto dots = spec.find(".."); dots != std::string::npos) {
    const std::size_t lo = to_dim(spec.substr(0, dots));
    const std::size_t hi = to_dim(spec.substr(dots + 2));
    if (hi < lo) throw CLI::ValidationError("--dims", "empty range");
    for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    return dims;
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    dims.push_back(to_dim(spec.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return dims;
}

void require_program(const ProgramSource& src) {
  if (!src.given()) throw CLI::RequiredError("--program or --program-file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Majorana constellations of qudit states and Moebius gates"};
  app.require_subcommand(1);

  std::string state_file, constellation_file, out_file, format = "json", view = "+z";
  double tol = kDefaultRootTolerance;
  double verify_tol = 1e-8;
  std::size_t dim = 0;
  int size = 512;
  bool allow_nonunitary = false;
  std::string dims_spec;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  ProgramSource program;

  auto* roots = app.add_subcommand("roots", "state file -> constellation file");
  roots->add_option("--state", state_file)->required();
  roots->add_option("--out", out_file)->required();
  roots->add_option("--tol", tol, "root-finder tolerance")->check(CLI::PositiveNumber);

  auto* reconstruct = app.add_subcommand("reconstruct", "constellation file -> state file");
  reconstruct->add_option("--constellation", constellation_file)->required();
  reconstruct->add_option("--out", out_file)->required();

  auto* transform = app.add_subcommand("transform", "apply a gate script to a state");
  transform->add_option("--state", state_file)->required();
  program.add_to(transform);
  transform->add_option("--out", out_file)->required();
  transform->add_flag("--allow-nonunitary", allow_nonunitary);

  auto* lift = app.add_subcommand("lift", "d x d unitary of a gate script");
  program.add_to(lift);
  lift->add_option("--dim", dim)->required()->check(CLI::Range(2, 100000));
  lift->add_option("--out", out_file)->required();

  auto* rotation = app.add_subcommand("rotation", "3 x 3 sphere rotation of a gate script");
  program.add_to(rotation);
  rotation->add_option("--out", out_file)->required();

  auto* project = app.add_subcommand("project", "sphere coordinates of a constellation");
  project->add_option("--constellation", constellation_file)->required();
  project->add_option("--out", out_file)->required();
  project->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* render_cmd = app.add_subcommand("render", "SVG picture of a constellation");
  auto* rs = render_cmd->add_option("--state", state_file);
  auto* rc = render_cmd->add_option("--constellation", constellation_file);
  rs->excludes(rc);
  rc->excludes(rs);
  render_cmd->add_option("--out", out_file)->required();
  render_cmd->add_option("--size", size)->check(CLI::Range(64, 16384));
  render_cmd->add_option("--view", view, "axis facing the viewer: +x -x +y -y +z -z")
      ->check(CLI::IsMember({"+x", "-x", "+y", "-y", "+z", "-z", "x", "y", "z"}));

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--dims", dims_spec, "A..B")->required();
  verify->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed)->required();
  verify->add_option("--tol", verify_tol)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_file)->required();

  try {
    app.parse(argc, argv);
    if (*transform || *lift || *rotation) require_program(program);
    if (*render_cmd && state_file.empty() && constellation_file.empty()) {
      throw CLI::RequiredError("--state or --constellation");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*roots) {
      const QuditState state = io::state_from_json(io::parse_json(io::read_file(state_file)));
      io::write_file(out_file, io::dump(io::to_json(find_roots(state_to_polynomial(state), tol))));
    } else if (*reconstruct) {
      const Constellation c =
          io::constellation_from_json(io::parse_json(io::read_file(constellation_file)));
      io::write_file(out_file, io::dump(io::to_json(constellation_to_state(c))));
    } else if (*transform) {
      const QuditState state = io::state_from_json(io::parse_json(io::read_file(state_file)));
      const MoebiusMap map = compile_program(program, allow_nonunitary);
      if (is_special_unitary(map)) {
        io::write_file(out_file, io::dump(io::to_json(lift_to_unitary(map, state.dim()).apply(state))));
      } else {
        const QuditState moved =
            polynomial_to_state(transform_polynomial(map, state_to_polynomial(state))).normalized();
        io::write_file(out_file, io::dump(io::to_json(moved)));
      }
    } else if (*lift) {
      io::write_file(out_file, io::dump(io::to_json(lift_to_unitary(compile_program(program, false), dim))));
    } else if (*rotation) {
      io::write_file(out_file, io::dump(io::to_json(to_rotation(compile_program(program, false)))));
    } else if (*project) {
      const Constellation c =
          io::constellation_from_json(io::parse_json(io::read_file(constellation_file)));
      const auto points = io::project(c);
      io::write_file(out_file, format == "csv" ? io::points_to_csv(points)
                                               : io::dump(io::points_to_json(points)));
    } else if (*render_cmd) {
      const Constellation c =
          state_file.empty()
              ? io::constellation_from_json(io::parse_json(io::read_file(constellation_file)))
              : state_to_constellation(io::state_from_json(io::parse_json(io::read_file(state_file))));
      render::RenderSpec spec;
      spec.size = size;
      spec.view = render::parse_view(view);
      io::write_file(out_file, render::to_svg(c, spec));
    } else if (*verify) {
      verify::SuiteConfig cfg;
      try {
        cfg.dims = parse_dims(dims_spec);
      } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
      }
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.tolerance = verify_tol;
      const verify::SuiteReport report = verify::run_suite(cfg);
      io::write_file(out_file, io::dump(verify::to_json(report)));
      if (report.failures() > 0) {
        std::cerr << "error: verify: " << report.failures() << " failing trial(s), see " << out_file
                  << "\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

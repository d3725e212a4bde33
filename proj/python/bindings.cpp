#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modvir/commands.hpp"

namespace py = pybind11;

namespace {

/// Runs one command and returns its JSON output as text; the Python side
/// parses it, so scalars stay exact strings.
std::string run_json(const std::string& command, const std::string& c, const std::string& h,
                     long long characteristic, int degree, int max, const std::string& sector,
                     const std::string& parity, bool compare_char0,
                     const std::vector<std::string>& only, const std::string& state, int mode,
                     const std::string& target) {
  modvir::RunConfig cfg;
  cfg.command = command;
  cfg.c = c;
  cfg.h = h;
  cfg.characteristic = characteristic;
  cfg.degree = degree;
  cfg.max = max;
  cfg.sector = sector;
  cfg.parity = parity;
  cfg.compare_char0 = compare_char0;
  cfg.only = only;
  cfg.state = state;
  cfg.mode = mode;
  cfg.target = target;
  modvir::CommandOutput out;
  {
    py::gil_scoped_release release;
    out = modvir::run_command(cfg);
  }
  return out.json.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Virasoro and free-fermion computations";
  py::register_exception<modvir::UnsupportedCharacteristic>(m, "UnsupportedCharacteristic",
                                                            PyExc_ValueError);
  py::register_exception<modvir::DenominatorDivisibleByP>(m, "DenominatorDivisibleByP",
                                                          PyExc_ArithmeticError);
  m.def("run_json", &run_json, py::arg("command"), py::arg("c") = "1/2", py::arg("h") = "0",
        py::arg("characteristic") = 0, py::arg("degree") = -1, py::arg("max") = 8,
        py::arg("sector") = "NS", py::arg("parity") = "even", py::arg("compare_char0") = false,
        py::arg("only") = std::vector<std::string>{}, py::arg("state") = "s", py::arg("mode") = 0,
        py::arg("target") = "");
}

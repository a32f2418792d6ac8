#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wph/chain.hpp"
#include "wph/cli.hpp"
#include "wph/dhyper.hpp"
#include "wph/digraph.hpp"
#include "wph/error.hpp"
#include "wph/homotopy.hpp"
#include "wph/io.hpp"

namespace py = pybind11;
using namespace wph;

namespace {

Ring parse_ring(const std::string& name) {
  if (name == "Z" || name == "z") return Ring::integers();
  if (name == "Q" || name == "q") return Ring::rationals();
  for (const char* prefix : {"Zmod:", "mod:"}) {
    const std::string p(prefix);
    if (name.rfind(p, 0) == 0) return Ring::integers_mod(mpz_class(name.substr(p.size())));
  }
  throw InvariantError("unknown ring \"" + name + "\" (expected Z, Q or Zmod:m)");
}

// Python ints, Fractions and "p/q" strings all go through str().
Scalar scalar_of(const py::handle& h) {
  Scalar q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

py::object to_python(const Scalar& x) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::str(x.get_str()));
}

py::object int_of(const mpz_class& x) { return py::module_::import("builtins").attr("int")(py::str(x.get_str())); }

PathComplex make_complex(const std::vector<std::string>& vertices, const std::vector<LabelPath>& paths,
                         const std::string& ring, const std::optional<py::dict>& weights) {
  PathComplexData d;
  d.vertices = vertices;
  d.paths = paths;
  d.ring = parse_ring(ring);
  if (weights) {
    WeightMap w;
    for (auto [k, v] : *weights) w[k.cast<std::string>()] = d.ring.from_rational(scalar_of(v));
    d.weights = std::move(w);
  }
  return PathComplex::build(d);
}

py::list groups_of(const HomologyResult& h) {
  py::list out;
  for (const auto& g : h.groups) {
    py::list torsion;
    for (const auto& t : g.torsion) torsion.append(int_of(t));
    out.append(py::make_tuple(g.free_rank, torsion));
  }
  return out;
}

std::vector<LabelPath> label_paths(const PathComplex& pc) {
  std::vector<LabelPath> out;
  for (const auto& p : pc.all_paths()) out.push_back(pc.label_path(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_wph, m) {
  m.doc() = "Weighted path homology engine";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UnsupportedRing>(m, "UnsupportedRing", m.attr("Error"));
  py::register_exception<NonInvertibleWeight>(m, "NonInvertibleWeight", m.attr("Error"));
  py::register_exception<InvariantError>(m, "InvariantError", m.attr("Error"));
  py::register_exception<SchemaError>(m, "SchemaError", m.attr("Error"));
  py::register_exception<SyntaxError>(m, "SyntaxError", m.attr("Error"));
  py::register_exception<IoError>(m, "IoError", m.attr("Error"));

  py::class_<PathComplex>(m, "PathComplex")
      .def(py::init(&make_complex), py::arg("vertices"), py::arg("paths"), py::arg("ring") = "Z",
           py::arg("weights") = py::none())
      .def_property_readonly("vertices", &PathComplex::labels)
      .def_property_readonly("paths", &label_paths)
      .def_property_readonly("ring", [](const PathComplex& pc) { return io::ring_text(pc.ring()); })
      .def_property_readonly("weights",
                             [](const PathComplex& pc) -> std::optional<py::dict> {
                               if (!pc.is_weighted()) return std::nullopt;
                               py::dict w;
                               for (VertexIndex v = 0; v < pc.vertex_count(); ++v) w[py::str(pc.label(v))] = to_python(pc.weight(v));
                               return w;
                             })
      .def("unweighted", [](const PathComplex& pc) { return pc.with_weights(std::nullopt); })
      .def("over_ring", [](const PathComplex& pc, const std::string& ring) { return pc.over_ring(parse_ring(ring)); })
      .def("__len__", &PathComplex::path_count)
      .def("__contains__", [](const PathComplex& pc, const LabelPath& p) {
        for (const auto& v : p)
          if (!pc.find(v)) return false;
        return pc.contains(pc.path_from_labels(p));
      });

  m.def("homology", [](const PathComplex& pc, int max_degree) { return groups_of(homology(pc, max_degree)); },
        py::arg("complex"), py::arg("max_degree") = 3,
        "Groups in degrees below max_degree as (free_rank, [torsion]) pairs.");
  m.def("omega_ranks",
        [](const PathComplex& pc, int max_degree) {
          const OmegaComplex omega = build_omega(pc, max_degree);
          std::vector<std::size_t> ranks;
          for (int n = 0; n <= max_degree; ++n) ranks.push_back(omega.rank(n));
          return ranks;
        },
        py::arg("complex"), py::arg("max_degree"));
  m.def("cylinder", [](const PathComplex& pc) { return cylinder(pc); });
  m.def("prism_identity_holds",
        [](const PathComplex& pc, const LabelPath& p) {
          const PrismOperator tau(pc);
          return tau.verify_identity(basis_chain(pc.path_from_labels(p))).holds;
        },
        py::arg("complex"), py::arg("path"));

  m.def("read_path_complex", [](const std::string& path) { return io::read_file(path).path_complex(); });
  m.def("dumps", [](const PathComplex& pc) { return io::emit(pc); });
  m.def("loads", [](const std::string& text) { return io::parse(text).path_complex(); });

  m.def("digraph_paths",
        [](const std::string& path, std::size_t max_length) {
          return paths_functor(io::read_file(path).digraph(), max_length);
        },
        py::arg("path"), py::arg("max_length"));
  m.def("hypergraph_complex",
        [](const std::string& path, const std::string& pipeline, std::size_t max_length) {
          const auto g = io::read_file(path).directed_hypergraph();
          if (pipeline == "natural") return paths_functor(natural_digraph(g), max_length);
          if (pipeline == "connective") return vertex_weighted_complex(g, VertexPipeline::Connective, max_length);
          if (pipeline == "bold") return vertex_weighted_complex(g, VertexPipeline::Bold, max_length);
          if (pipeline == "density2") return vertex_weighted_complex(g, VertexPipeline::DensityTwo, max_length);
          throw InvariantError("unknown pipeline \"" + pipeline + "\"");
        },
        py::arg("path"), py::arg("pipeline"), py::arg("max_length"));

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}

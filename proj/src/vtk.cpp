#include "tricap/vtk.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tricap/errors.hpp"

namespace tricap {

const std::vector<double>& Snapshot::field(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return f.data;
  throw IoFailure("snapshot has no field '" + name + "'");
}

bool Snapshot::has(const std::string& name) const {
  for (const auto& f : fields)
    if (f.name == name) return true;
  return false;
}

double Snapshot::meta_or(const std::string& key, double fallback) const {
  auto it = meta.find(key);
  return it == meta.end() ? fallback : it->second;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_array(std::ofstream& out, const std::string& name,
                 const Grid& g, const ScalarField& f) {
  out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out << num(f(i, j));
      out << (i + 1 == g.nx ? '\n' : ' ');
    }
  }
}

}  // namespace

void write_snapshot(const std::string& path, const FluidState& s) {
  const Grid& g = s.grid;
  const MaterialParams& p = s.params;
  std::ofstream out(path);
  if (!out) throw IoFailure("cannot open " + path + " for writing");

  std::ostringstream title;
  title << "tricap t=" << num(s.time) << " eps=" << num(p.epsilon)
        << " g12=" << num(p.gamma12) << " g13=" << num(p.gamma13)
        << " g23=" << num(p.gamma23) << " M=" << num(p.mobility)
        << " rho=" << num(p.rho) << " eta=" << num(p.eta)
        << " bx=" << (g.bx == BoundaryKind::Wall ? 1 : 0)
        << " by=" << (g.by == BoundaryKind::Wall ? 1 : 0);

  out << "# vtk DataFile Version 3.0\n"
      << title.str() << "\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << g.nx << " " << g.ny << " 1\n"
      << "ORIGIN " << num(g.xc(0)) << " " << num(g.yc(0)) << " 0\n"
      << "SPACING " << num(g.hx) << " " << num(g.hy) << " 1\n"
      << "POINT_DATA " << g.nx * g.ny << "\n";

  write_array(out, "c1", g, s.c.c1);
  write_array(out, "c2", g, s.c.c2);
  write_array(out, "c3", g, s.c.c3);
  write_array(out, "p", g, s.p);

  ScalarField uc(g.nx, g.ny), vc(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      uc(i, j) = 0.5 * (s.v.u(i, j) + s.v.u(i + 1, j));
      vc(i, j) = 0.5 * (s.v.v(i, j) + s.v.v(i, j + 1));
    }
  write_array(out, "u", g, uc);
  write_array(out, "v", g, vc);
  if (!out) throw IoFailure("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open " + path);
  Snapshot snap;

  std::string line;
  if (!std::getline(in, line)) throw IoFailure("empty snapshot: " + path);
  if (!std::getline(in, line)) throw IoFailure("truncated snapshot: " + path);
  {
    std::istringstream ts(line);
    std::string tok;
    while (ts >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      try {
        snap.meta[tok.substr(0, eq)] = std::stod(tok.substr(eq + 1));
      } catch (const std::exception&) {
      }
    }
  }

  int nz = 1;
  std::string word;
  while (in >> word) {
    if (word == "DIMENSIONS") {
      in >> snap.nx >> snap.ny >> nz;
    } else if (word == "ORIGIN") {
      double oz;
      in >> snap.ox >> snap.oy >> oz;
    } else if (word == "SPACING") {
      double hz;
      in >> snap.hx >> snap.hy >> hz;
    } else if (word == "SCALARS") {
      SnapshotField f;
      std::string type, rest;
      int comps = 1;
      in >> f.name >> type;
      std::getline(in, rest);  // optional component count
      {
        std::istringstream rs(rest);
        int c;
        if (rs >> c) comps = c;
      }
      std::string lt, ltname;
      in >> lt >> ltname;  // LOOKUP_TABLE default
      const long n = static_cast<long>(snap.nx) * snap.ny * nz * comps;
      if (n <= 0) throw IoFailure("snapshot scalars before dimensions");
      f.data.resize(n);
      for (long k = 0; k < n; ++k)
        if (!(in >> f.data[k]))
          throw IoFailure("truncated array '" + f.name + "' in " + path);
      snap.fields.push_back(std::move(f));
    }
  }
  if (snap.nx <= 0 || snap.ny <= 0 || snap.fields.empty())
    throw IoFailure("not a structured-points snapshot: " + path);
  return snap;
}

}  // namespace tricap

#include "lycoact/io.hpp"

#include <fstream>
#include <sstream>

namespace lyc::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << content;
}

std::string file_hash(const std::filesystem::path& path) {
  std::string data = read_file(path);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Rational scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("scalar must be an integer or a string, got: " + j.dump());
}

json scalar_to_json(const Rational& r) { return r.to_string(); }

namespace {

json parse_root(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

int index_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("expected 1-based index for ") + what + ", got " + j.dump());
  return j.get<int>() - 1;
}

}  // namespace

LYAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw InputError("algebra file: missing \"dim\"");
  int dim = j.at("dim").get<int>();
  SparseTau tau;
  SparseOmega omega;
  if (j.contains("tau"))
    for (const auto& e : j.at("tau")) {
      if (!e.is_array() || e.size() != 4) throw InputError("algebra file: tau entries are [i,j,s,coeff]");
      tau[{index_from_json(e[0], "tau.i"), index_from_json(e[1], "tau.j"), index_from_json(e[2], "tau.s")}] =
          scalar_from_json(e[3]);
    }
  if (j.contains("omega"))
    for (const auto& e : j.at("omega")) {
      if (!e.is_array() || e.size() != 5) throw InputError("algebra file: omega entries are [i,j,k,s,coeff]");
      omega[{index_from_json(e[0], "omega.i"), index_from_json(e[1], "omega.j"), index_from_json(e[2], "omega.k"),
             index_from_json(e[3], "omega.s")}] = scalar_from_json(e[4]);
    }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  try {
    return LYAlgebra(dim, std::move(tau), std::move(omega), std::move(labels));
  } catch (const Error& e) {
    throw InputError(std::string("algebra file: ") + e.what());
  }
}

json algebra_to_json(const LYAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  json tau = json::array();
  for (const auto& [k, c] : L.tau()) tau.push_back({k[0] + 1, k[1] + 1, k[2] + 1, scalar_to_json(c)});
  j["tau"] = std::move(tau);
  json omega = json::array();
  for (const auto& [k, c] : L.omega())
    omega.push_back({k[0] + 1, k[1] + 1, k[2] + 1, k[3] + 1, scalar_to_json(c)});
  j["omega"] = std::move(omega);
  if (!L.labels().empty()) j["labels"] = L.labels();
  return j;
}

LYAlgebra load_algebra(const std::filesystem::path& path) { return algebra_from_json(parse_root(path)); }

CommAlgebra comm_algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim")) throw InputError("algebra file: missing \"dim\"");
  int dim = j.at("dim").get<int>();
  SparseTau mult;
  if (j.contains("mult"))
    for (const auto& e : j.at("mult")) {
      if (!e.is_array() || e.size() != 4) throw InputError("algebra file: mult entries are [a,b,c,coeff]");
      mult[{index_from_json(e[0], "mult.a"), index_from_json(e[1], "mult.b"), index_from_json(e[2], "mult.c")}] =
          scalar_from_json(e[3]);
    }
  QVector unit(dim);
  if (!j.contains("unit")) throw InputError("algebra file: missing \"unit\"");
  const auto& u = j.at("unit");
  if (!u.is_array() || u.size() != static_cast<size_t>(dim)) throw InputError("algebra file: unit length mismatch");
  for (int i = 0; i < dim; ++i) unit[i] = scalar_from_json(u[i]);
  try {
    return CommAlgebra(dim, std::move(mult), std::move(unit));
  } catch (const Error& e) {
    throw InputError(std::string("algebra file: ") + e.what());
  }
}

json comm_algebra_to_json(const CommAlgebra& A) {
  json j;
  j["dim"] = A.dim();
  json mult = json::array();
  for (const auto& [k, c] : A.mult()) mult.push_back({k[0] + 1, k[1] + 1, k[2] + 1, scalar_to_json(c)});
  j["mult"] = std::move(mult);
  json unit = json::array();
  for (const auto& c : A.unit()) unit.push_back(scalar_to_json(c));
  j["unit"] = std::move(unit);
  return j;
}

CommAlgebra load_comm_algebra(const std::filesystem::path& path) {
  return comm_algebra_from_json(parse_root(path));
}

QMatrix matrix_from_json(const json& j) {
  const json* rows = nullptr;
  if (j.is_array())
    rows = &j;
  else if (j.is_object() && j.contains("entries"))
    rows = &j.at("entries");
  else
    throw InputError("matrix file: expected 2D array or {\"entries\": [[..],..]}");
  if (rows->empty()) return QMatrix(0, 0);
  int r = static_cast<int>(rows->size());
  int c = static_cast<int>((*rows)[0].size());
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    const auto& row = (*rows)[i];
    if (!row.is_array() || static_cast<int>(row.size()) != c) throw InputError("matrix file: ragged rows");
    for (int k = 0; k < c; ++k) m.at(i, k) = scalar_from_json(row[k]);
  }
  return m;
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m.at(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix load_matrix(const std::filesystem::path& path) { return matrix_from_json(parse_root(path)); }

LYModule module_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("over")) throw InputError("module file: missing \"over\"");
  std::filesystem::path over_path = j.at("over").get<std::string>();
  if (over_path.is_relative()) over_path = base_dir / over_path;
  LYAlgebra L = load_algebra(over_path);
  const int n = L.dim();
  if (!j.contains("dim")) throw InputError("module file: missing \"dim\"");
  int m = j.at("dim").get<int>();

  std::vector<QMatrix> rho(static_cast<size_t>(n), QMatrix(m, m));
  std::vector<QMatrix> d(static_cast<size_t>(n) * n, QMatrix(m, m));
  std::vector<QMatrix> theta(static_cast<size_t>(n) * n, QMatrix(m, m));
  auto check_shape = [m](const QMatrix& mat) {
    if (mat.rows() != m || mat.cols() != m) throw InputError("module file: matrix shape mismatch");
  };
  if (j.contains("rho"))
    for (const auto& e : j.at("rho")) {
      if (!e.is_array() || e.size() != 2) throw InputError("module file: rho entries are [i, matrix]");
      int i = index_from_json(e[0], "rho.i");
      if (i < 0 || i >= n) throw InputError("module file: rho index out of range");
      rho[i] = matrix_from_json(e[1]);
      check_shape(rho[i]);
    }
  auto read_pairs = [&](const char* key, std::vector<QMatrix>& slot) {
    if (!j.contains(key)) return;
    for (const auto& e : j.at(key)) {
      if (!e.is_array() || e.size() != 3) throw InputError(std::string("module file: ") + key + " entries are [i,j,matrix]");
      int i = index_from_json(e[0], key);
      int jj = index_from_json(e[1], key);
      if (i < 0 || i >= n || jj < 0 || jj >= n) throw InputError(std::string("module file: ") + key + " index out of range");
      slot[i * n + jj] = matrix_from_json(e[2]);
      check_shape(slot[i * n + jj]);
    }
  };
  read_pairs("D", d);
  read_pairs("theta", theta);
  try {
    return LYModule(std::move(L), m, std::move(rho), std::move(d), std::move(theta));
  } catch (const Error& e) {
    throw InputError(std::string("module file: ") + e.what());
  }
}

json module_to_json(const LYModule& M, const std::string& over_ref) {
  json j;
  j["over"] = over_ref;
  j["dim"] = M.mdim();
  const int n = M.over().dim();
  json rho = json::array(), d = json::array(), theta = json::array();
  for (int i = 0; i < n; ++i)
    if (!M.rho(i).is_zero()) rho.push_back({i + 1, matrix_to_json(M.rho(i))});
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (!M.D(i, k).is_zero()) d.push_back({i + 1, k + 1, matrix_to_json(M.D(i, k))});
      if (!M.theta(i, k).is_zero()) theta.push_back({i + 1, k + 1, matrix_to_json(M.theta(i, k))});
    }
  j["rho"] = std::move(rho);
  j["D"] = std::move(d);
  j["theta"] = std::move(theta);
  return j;
}

LYModule load_module(const std::filesystem::path& path) {
  return module_from_json(parse_root(path), path.parent_path());
}

MatrixPoint matrix_point_from_json(const Presentation& pres, const json& j) {
  if (!j.is_object() || !j.contains("wdim")) throw InputError("point file: missing \"wdim\"");
  int w = j.at("wdim").get<int>();
  const int n = pres.dim_l(), nk = pres.dim_k();
  std::vector<QMatrix> images(static_cast<size_t>(n) * nk, QMatrix(w, w));
  if (j.contains("images"))
    for (const auto& e : j.at("images")) {
      if (!e.is_array() || e.size() != 3) throw InputError("point file: images entries are [s,i,matrix]");
      int s = index_from_json(e[0], "images.s");
      int i = index_from_json(e[1], "images.i");
      if (s < 0 || s >= n || i < 0 || i >= nk) throw InputError("point file: image index out of range");
      images[s * nk + i] = matrix_from_json(e[2]);
    }
  return verify_matrix_point(pres, w, std::move(images));
}

json grading_to_json(const Grading& g) {
  json j;
  j["group"] = g.group()->orders();
  if (g.is_diagonal()) {
    json assignment = json::array();
    const auto& a = g.assignment();
    for (size_t i = 0; i < a.size(); ++i) assignment.push_back({i + 1, g.group()->exponents(a[i])});
    j["assignment"] = std::move(assignment);
  } else {
    json comps = json::array();
    for (const auto& [elem, m] : g.components())
      comps.push_back({g.group()->exponents(elem), matrix_to_json(m)});
    j["components"] = std::move(comps);
  }
  return j;
}

std::string presentation_text(const Presentation& pres) {
  std::ostringstream os;
  os << "universal presentation A(L,K)\n";
  os << "dim L: " << pres.dim_l() << "\n";
  os << "dim K: " << pres.dim_k() << "\n";
  os << "order: " << to_string(pres.order()) << "\n";
  os << "variables (" << pres.varset()->size() << "):";
  for (int v = 0; v < pres.varset()->size(); ++v) os << " " << pres.varset()->name(v);
  os << "\n";
  auto names = pres.generator_names();
  auto gens = pres.generator_list();
  os << "generators (" << gens.size() << "):\n";
  for (size_t k = 0; k < gens.size(); ++k) os << names[k] << " = " << gens[k].to_text() << "\n";
  return os.str();
}

json presentation_json(const Presentation& pres) {
  json j;
  j["dim_l"] = pres.dim_l();
  j["dim_k"] = pres.dim_k();
  j["order"] = to_string(pres.order());
  json vars = json::array();
  for (int v = 0; v < pres.varset()->size(); ++v) vars.push_back(pres.varset()->name(v));
  j["variables"] = std::move(vars);
  json gens = json::array();
  auto names = pres.generator_names();
  auto list = pres.generator_list();
  for (size_t k = 0; k < list.size(); ++k) gens.push_back({{"name", names[k]}, {"poly", list[k].to_text()}});
  j["generators"] = std::move(gens);
  return j;
}

std::string hopf_text(const HopfPresentation& H) {
  std::ostringstream os;
  os << "hopf envelope presentation, depth " << H.depth() << "\n";
  os << "dim: " << H.dim() << "\n";
  os << "order: " << to_string(H.order()) << "\n";
  os << "variables (" << H.varset()->size() << "):";
  for (int v = 0; v < H.varset()->size(); ++v) os << " " << H.varset()->name(v);
  os << "\n";
  os << "generators (" << H.generators().size() << "):\n";
  for (const auto& g : H.generators()) os << g.name() << " = " << g.poly.to_text() << "\n";
  os << "delta images:\n";
  for (int v = 0; v < H.varset()->size(); ++v)
    os << "Delta(" << H.varset()->name(v) << ") = " << H.delta_of_var(v).to_text() << "\n";
  return os.str();
}

json hopf_json(const HopfPresentation& H) {
  json j;
  j["depth"] = H.depth();
  j["dim"] = H.dim();
  j["order"] = to_string(H.order());
  json vars = json::array();
  for (int v = 0; v < H.varset()->size(); ++v) vars.push_back(H.varset()->name(v));
  j["variables"] = std::move(vars);
  json gens = json::array();
  for (const auto& g : H.generators()) gens.push_back({{"name", g.name()}, {"poly", g.poly.to_text()}});
  j["generators"] = std::move(gens);
  return j;
}

namespace {

std::string relation_name(const ModuleRelation& r) {
  std::ostringstream os;
  os << "R" << r.family << "[";
  os << r.key[0] + 1 << "," << r.key[1] + 1;
  if (r.family != 1) os << "," << r.key[2] + 1;
  os << "," << r.key[3] + 1 << "]";
  return os.str();
}

std::string relation_body(const ModuleRelation& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [tr, poly] : r.terms) {
    if (!first) os << " + ";
    os << "(" << poly.to_text() << ")*Y[" << tr.first + 1 << "," << tr.second + 1 << "]";
    first = false;
  }
  return os.str();
}

}  // namespace

std::string module_presentation_text(const ModulePresentation& mp) {
  std::ostringstream os;
  os << "universal module presentation U(U,V)\n";
  os << "generators (" << mp.generator_count() << "):";
  for (int s = 0; s < mp.generator_rows(); ++s)
    for (int r = 0; r < mp.generator_cols(); ++r) os << " Y[" << s + 1 << "," << r + 1 << "]";
  os << "\n";
  os << "relations (" << mp.relations().size() << "):\n";
  for (const auto& rel : mp.relations()) os << relation_name(rel) << " = " << relation_body(rel) << "\n";
  if (mp.is_free()) os << "free module of rank " << mp.generator_count() << "\n";
  return os.str();
}

json module_presentation_json(const ModulePresentation& mp) {
  json j;
  j["generator_rows"] = mp.generator_rows();
  j["generator_cols"] = mp.generator_cols();
  json rels = json::array();
  for (const auto& rel : mp.relations()) {
    json terms = json::array();
    for (const auto& [tr, poly] : rel.terms)
      terms.push_back({{"t", tr.first + 1}, {"r", tr.second + 1}, {"coeff", poly.to_text()}});
    rels.push_back({{"name", relation_name(rel)}, {"terms", std::move(terms)}});
  }
  j["relations"] = std::move(rels);
  j["free"] = mp.is_free();
  return j;
}

namespace {

std::string cas_poly(const Polynomial& p, const VarSet& vs) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a.sign() < 0 ? "-" : "+");
      if (a.sign() < 0) a = -a;
    }
    bool printed = false;
    if (!a.is_one() || m.is_one()) {
      os << a.to_string();
      printed = true;
    }
    for (const auto& [v, e] : m.entries()) {
      if (printed) os << "*";
      os << vs.cas_name(v);
      if (e > 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

std::string cas_script_impl(const VarSet& vs, const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  os << "ring R = 0, (";
  for (int v = 0; v < vs.size(); ++v) os << (v ? "," : "") << vs.cas_name(v);
  os << "), dp;\n";
  os << "ideal J =\n";
  if (gens.empty()) {
    os << "0;\n";
  } else {
    for (size_t k = 0; k < gens.size(); ++k)
      os << cas_poly(gens[k], vs) << (k + 1 < gens.size() ? ",\n" : ";\n");
  }
  os << "J;\n";
  return os.str();
}

}  // namespace

std::string cas_script(const Presentation& pres) {
  return cas_script_impl(*pres.varset(), pres.generator_list());
}

std::string cas_script(const HopfPresentation& H) {
  std::vector<Polynomial> gens;
  for (const auto& g : H.generators()) gens.push_back(g.poly);
  return cas_script_impl(*H.varset(), gens);
}

}  // namespace lyc::io

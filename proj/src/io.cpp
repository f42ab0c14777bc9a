#include "bent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bent/state_zoo.hpp"

namespace bent {

using nlohmann::json;

std::string format_float(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

namespace {

json vector_to_json_re(const Eigen::VectorXcd& v) {
  json arr = json::array();
  for (long i = 0; i < v.size(); ++i) arr.push_back(v(i).real());
  return arr;
}

json vector_to_json_im(const Eigen::VectorXcd& v) {
  json arr = json::array();
  for (long i = 0; i < v.size(); ++i) arr.push_back(v(i).imag());
  return arr;
}

Eigen::VectorXcd vector_from_json(const json& re, const json& im) {
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw std::invalid_argument("state JSON: re/im must be arrays of equal length");
  Eigen::VectorXcd v(re.size());
  for (size_t i = 0; i < re.size(); ++i)
    v(i) = cxd(re[i].get<double>(), im[i].get<double>());
  return v;
}

}  // namespace

std::string state_to_json(const AnyState& state) {
  json j;
  if (std::holds_alternative<PureState>(state)) {
    const PureState& psi = std::get<PureState>(state);
    j["kind"] = "pure";
    j["n_parties"] = psi.n_parties;
    j["re"] = vector_to_json_re(psi.amps);
    j["im"] = vector_to_json_im(psi.amps);
  } else {
    const DensityMatrix& rho = std::get<DensityMatrix>(state);
    const Eigen::VectorXcd flat =
        Eigen::Map<const Eigen::VectorXcd>(
            Eigen::MatrixXcd(rho.mat.transpose()).data(), rho.mat.size());
    j["kind"] = "density";
    j["n_parties"] = rho.n_parties;
    j["re"] = vector_to_json_re(flat);
    j["im"] = vector_to_json_im(flat);
  }
  return j.dump();
}

AnyState state_from_json(const std::string& text) {
  const json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n_parties").get<int>();
  if (n < 1 || n > 20) throw std::invalid_argument("state JSON: bad n_parties");
  const Eigen::VectorXcd flat = vector_from_json(j.at("re"), j.at("im"));
  const long d = dim_of(n);
  if (kind == "pure") {
    if (flat.size() != d) throw std::invalid_argument("state JSON: bad vector length");
    return PureState{n, flat};
  }
  if (kind == "density") {
    if (flat.size() != d * d)
      throw std::invalid_argument("state JSON: bad matrix length");
    Eigen::MatrixXcd m(d, d);
    for (long r = 0; r < d; ++r)
      for (long c = 0; c < d; ++c) m(r, c) = flat(r * d + c);  // row-major
    return DensityMatrix{n, std::move(m)};
  }
  throw std::invalid_argument("state JSON: kind must be pure or density");
}

void save_state(const AnyState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << state_to_json(state) << "\n";
}

AnyState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return state_from_json(ss.str());
}

std::string decomposition_to_json(const Decomposition& dec) {
  json j;
  j["weights"] = json::array();
  for (long k = 0; k < dec.weights.size(); ++k)
    j["weights"].push_back(dec.weights(k));
  j["states"] = json::array();
  for (const PureState& s : dec.states)
    j["states"].push_back(json::parse(state_to_json(s)));
  if (dec.isometry) {
    const Eigen::MatrixXcd& u = *dec.isometry;
    json re = json::array(), im = json::array();
    for (long r = 0; r < u.rows(); ++r)
      for (long c = 0; c < u.cols(); ++c) {
        re.push_back(u(r, c).real());
        im.push_back(u(r, c).imag());
      }
    j["isometry_re"] = re;
    j["isometry_im"] = im;
    j["isometry_rows"] = u.rows();
    j["isometry_cols"] = u.cols();
  }
  return j.dump();
}

Decomposition decomposition_from_json(const std::string& text, int n_parties) {
  const json j = json::parse(text);
  Decomposition dec;
  const auto& w = j.at("weights");
  dec.weights.resize(w.size());
  for (size_t k = 0; k < w.size(); ++k) dec.weights(k) = w[k].get<double>();
  for (const auto& sj : j.at("states")) {
    AnyState s = state_from_json(sj.dump());
    if (!std::holds_alternative<PureState>(s))
      throw std::invalid_argument("decomposition JSON: states must be pure");
    if (std::get<PureState>(s).n_parties != n_parties)
      throw std::invalid_argument("decomposition JSON: party count mismatch");
    dec.states.push_back(std::get<PureState>(s));
  }
  if (j.contains("isometry_re")) {
    const long rows = j.at("isometry_rows").get<long>();
    const long cols = j.at("isometry_cols").get<long>();
    Eigen::MatrixXcd u(rows, cols);
    const auto& re = j.at("isometry_re");
    const auto& im = j.at("isometry_im");
    for (long r = 0; r < rows; ++r)
      for (long c = 0; c < cols; ++c)
        u(r, c) = cxd(re[r * cols + c].get<double>(),
                      im[r * cols + c].get<double>());
    dec.isometry = std::move(u);
  }
  return dec;
}

namespace {

std::vector<std::string> split_tokens(const std::string& spec) {
  std::vector<std::string> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    throw std::invalid_argument("bad integer token '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument("bad integer token '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (...) {
    throw std::invalid_argument("bad number token '" + tok + "'");
  }
  if (pos != tok.size()) throw std::invalid_argument("bad number token '" + tok + "'");
  return v;
}

}  // namespace

AnyState parse_state_spec(const std::string& spec) {
  const auto tok = split_tokens(spec);
  if (tok.empty()) throw std::invalid_argument("empty state spec");
  const std::string& head = tok[0];
  auto arity = [&](size_t lo, size_t hi) {
    if (tok.size() - 1 < lo || tok.size() - 1 > hi)
      throw std::invalid_argument("wrong argument count for '" + head + "'");
  };
  if (head == "smolin") {
    arity(0, 0);
    return smolin();
  }
  if (head == "sigma-smolin") {
    arity(0, 0);
    return sigma_smolin();
  }
  if (head == "ghz") {
    arity(1, 2);
    return ghz(parse_int(tok[1]), tok.size() > 2 ? parse_real(tok[2]) : 0.0);
  }
  if (head == "dur") {
    arity(2, 2);
    return dur(parse_int(tok[1]), parse_real(tok[2]));
  }
  if (head == "sigma-dur") {
    arity(2, 2);
    return sigma_dur(parse_int(tok[1]), parse_real(tok[2]));
  }
  if (head == "bell") {
    arity(1, 1);
    return bell(parse_int(tok[1]));
  }
  if (head == "x") {
    arity(1, 1);
    return x_state(parse_int(tok[1]));
  }
  if (head == "u") {
    arity(2, 2);
    return u_state(parse_int(tok[1]), parse_int(tok[2]));
  }
  if (head == "v") {
    arity(2, 2);
    return v_state(parse_int(tok[1]), parse_int(tok[2]));
  }
  if (head == "psiy") {
    arity(5, 5);
    PsiSign sign;
    if (tok[3] == "+") sign = PsiSign::plus;
    else if (tok[3] == "-") sign = PsiSign::minus;
    else throw std::invalid_argument("bad sign token '" + tok[3] + "'");
    PsiType type;
    if (tok[4] == "u") type = PsiType::u;
    else if (tok[4] == "v") type = PsiType::v;
    else throw std::invalid_argument("bad type token '" + tok[4] + "'");
    return psi_y(parse_int(tok[1]), parse_real(tok[2]), sign, type,
                 parse_int(tok[5]));
  }
  throw std::invalid_argument("unknown state name '" + head + "'");
}

}  // namespace bent

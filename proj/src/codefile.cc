#include "csst/codefile.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "csst/rm.h"
#include "json.hpp"

namespace csst {

namespace {

using json = nlohmann::json;

std::string sign_text(int sign) { return sign < 0 ? "-" : "+"; }

int parse_sign(const std::string &s) {
  if (s == "+" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw std::invalid_argument("bad sign '" + s + "'");
}

BitVector parse_bits(const std::string &s, size_t n) {
  BitVector v = BitVector::from_string(s);
  if (v.size() != n) {
    throw std::invalid_argument("'" + s + "' has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(n));
  }
  return v;
}

PauliOp signed_pauli(int sign, BitVector x, BitVector z) {
  return PauliOp(std::move(x), std::move(z), sign < 0 ? 4 : 0);
}

int pauli_sign(const PauliOp &p) {
  if (p.phase != 0 && p.phase != 4) {
    throw std::invalid_argument("operator " + to_string(p) + " is not Hermitian");
  }
  return p.phase == 4 ? -1 : 1;
}

// Collected fields before the code object is built.
struct Fields {
  std::string name;
  size_t n = 0;
  bool have_n = false;
  CodeFile::Kind kind = CodeFile::Kind::kCss;
  std::vector<BitVector> xs, zs;
  std::vector<int> x_signs, z_signs;
  std::vector<PauliOp> gens;
  std::vector<BitVector> lx, lz;
  std::vector<PauliOp> lx_ops, lz_ops;
};

CodeFile build(Fields f) {
  if (!f.have_n) throw std::invalid_argument("missing n");
  if (f.kind == CodeFile::Kind::kCss) {
    if (!f.gens.empty()) {
      throw std::invalid_argument("'g' lines need kind stabilizer");
    }
    CssCode code(f.n, f.xs, f.zs, f.z_signs, f.lx, f.lz, f.name);
    code.set_x_signs(f.x_signs);
    return CodeFile::from_css(std::move(code));
  }
  if (!f.xs.empty() || !f.zs.empty()) {
    throw std::invalid_argument("'x'/'z' lines need kind css");
  }
  StabilizerCode code(f.n, f.gens, f.name);
  code.logical_x = f.lx_ops;
  code.logical_z = f.lz_ops;
  return CodeFile::from_stabilizer(std::move(code));
}

CodeFile parse_text(const std::string &text) {
  Fields f;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      const std::string &key = tok[0];
      auto want = [&](size_t count) {
        if (tok.size() != count + 1) {
          throw std::invalid_argument("'" + key + "' takes " +
                                      std::to_string(count) + " fields");
        }
      };
      auto need_n = [&] {
        if (!f.have_n) throw std::invalid_argument("n must come first");
      };
      bool stab = f.kind == CodeFile::Kind::kStabilizer;
      if (key == "name") {
        want(1);
        f.name = tok[1];
      } else if (key == "n") {
        want(1);
        f.n = std::stoul(tok[1]);
        f.have_n = true;
      } else if (key == "kind") {
        want(1);
        if (tok[1] == "css") {
          f.kind = CodeFile::Kind::kCss;
        } else if (tok[1] == "stabilizer") {
          f.kind = CodeFile::Kind::kStabilizer;
        } else {
          throw std::invalid_argument("unknown kind '" + tok[1] + "'");
        }
      } else if (key == "x" || key == "z") {
        want(2);
        need_n();
        (key == "x" ? f.xs : f.zs).push_back(parse_bits(tok[2], f.n));
        (key == "x" ? f.x_signs : f.z_signs).push_back(parse_sign(tok[1]));
      } else if (key == "g") {
        want(3);
        need_n();
        f.gens.push_back(signed_pauli(parse_sign(tok[1]), parse_bits(tok[2], f.n),
                                      parse_bits(tok[3], f.n)));
      } else if ((key == "logical_x" || key == "logical_z") && stab) {
        want(3);
        need_n();
        (key == "logical_x" ? f.lx_ops : f.lz_ops)
            .push_back(signed_pauli(parse_sign(tok[1]), parse_bits(tok[2], f.n),
                                    parse_bits(tok[3], f.n)));
      } else if (key == "logical_x" || key == "logical_z") {
        want(1);
        need_n();
        (key == "logical_x" ? f.lx : f.lz).push_back(parse_bits(tok[1], f.n));
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument &e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return build(std::move(f));
}

json signed_entry(int sign, const BitVector &bits) {
  return {{"sign", sign}, {"bits", bits.to_string()}};
}

json pauli_entry(const PauliOp &p) {
  return {{"sign", pauli_sign(p)}, {"x", p.x.to_string()}, {"z", p.z.to_string()}};
}

CodeFile parse_json(const std::string &text) {
  json j = json::parse(text);
  Fields f;
  f.name = j.value("name", "");
  f.n = j.at("n").get<size_t>();
  f.have_n = true;
  std::string kind = j.value("kind", "css");
  if (kind == "stabilizer") {
    f.kind = CodeFile::Kind::kStabilizer;
  } else if (kind != "css") {
    throw std::invalid_argument("unknown kind '" + kind + "'");
  }
  auto get_sign = [](const json &e) { return e.value("sign", 1); };
  auto get_pauli = [&](const json &e) {
    return signed_pauli(get_sign(e), parse_bits(e.at("x"), f.n),
                        parse_bits(e.at("z"), f.n));
  };
  if (f.kind == CodeFile::Kind::kCss) {
    for (const auto &e : j.value("x_generators", json::array())) {
      f.xs.push_back(parse_bits(e.at("bits"), f.n));
      f.x_signs.push_back(get_sign(e));
    }
    for (const auto &e : j.value("z_generators", json::array())) {
      f.zs.push_back(parse_bits(e.at("bits"), f.n));
      f.z_signs.push_back(get_sign(e));
    }
    for (const auto &e : j.value("logical_x", json::array())) {
      f.lx.push_back(parse_bits(e, f.n));
    }
    for (const auto &e : j.value("logical_z", json::array())) {
      f.lz.push_back(parse_bits(e, f.n));
    }
  } else {
    for (const auto &e : j.value("generators", json::array())) {
      f.gens.push_back(get_pauli(e));
    }
    for (const auto &e : j.value("logical_x", json::array())) {
      f.lx_ops.push_back(get_pauli(e));
    }
    for (const auto &e : j.value("logical_z", json::array())) {
      f.lz_ops.push_back(get_pauli(e));
    }
  }
  return build(std::move(f));
}

}  // namespace

CodeFile CodeFile::from_css(CssCode code) {
  CodeFile f;
  f.kind = Kind::kCss;
  f.stabilizer = code.to_stabilizer();
  f.css = std::move(code);
  return f;
}

CodeFile CodeFile::from_stabilizer(StabilizerCode code) {
  CodeFile f;
  f.kind = Kind::kStabilizer;
  f.stabilizer = std::move(code);
  return f;
}

CodeFile parse_code_file(const std::string &text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return parse_json(text);
    } catch (const json::exception &e) {
      throw std::invalid_argument(std::string("JSON: ") + e.what());
    }
  }
  return parse_text(text);
}

std::string to_text(const CodeFile &file) {
  std::ostringstream out;
  if (!file.name().empty()) out << "name " << file.name() << "\n";
  out << "n " << file.n() << "\n";
  if (file.kind == CodeFile::Kind::kCss) {
    const CssCode &c = file.css;
    out << "kind css\n";
    for (size_t i = 0; i < c.x_stabilizers().size(); i++) {
      out << "x " << sign_text(c.x_signs()[i]) << " "
          << c.x_stabilizers()[i].to_string() << "\n";
    }
    for (size_t i = 0; i < c.z_stabilizers().size(); i++) {
      out << "z " << sign_text(c.z_signs()[i]) << " "
          << c.z_stabilizers()[i].to_string() << "\n";
    }
    for (const auto &v : c.logical_x()) out << "logical_x " << v.to_string() << "\n";
    for (const auto &v : c.logical_z()) out << "logical_z " << v.to_string() << "\n";
    return out.str();
  }
  const StabilizerCode &s = file.stabilizer;
  out << "kind stabilizer\n";
  auto line = [&](const char *key, const PauliOp &p) {
    out << key << " " << sign_text(pauli_sign(p)) << " " << p.x.to_string() << " "
        << p.z.to_string() << "\n";
  };
  for (const auto &g : s.generators()) line("g", g);
  for (const auto &p : s.logical_x) line("logical_x", p);
  for (const auto &p : s.logical_z) line("logical_z", p);
  return out.str();
}

std::string to_json(const CodeFile &file) {
  json j;
  j["name"] = file.name();
  j["n"] = file.n();
  if (file.kind == CodeFile::Kind::kCss) {
    const CssCode &c = file.css;
    j["kind"] = "css";
    j["x_generators"] = json::array();
    j["z_generators"] = json::array();
    for (size_t i = 0; i < c.x_stabilizers().size(); i++) {
      j["x_generators"].push_back(signed_entry(c.x_signs()[i], c.x_stabilizers()[i]));
    }
    for (size_t i = 0; i < c.z_stabilizers().size(); i++) {
      j["z_generators"].push_back(signed_entry(c.z_signs()[i], c.z_stabilizers()[i]));
    }
    j["logical_x"] = json::array();
    j["logical_z"] = json::array();
    for (const auto &v : c.logical_x()) j["logical_x"].push_back(v.to_string());
    for (const auto &v : c.logical_z()) j["logical_z"].push_back(v.to_string());
  } else {
    const StabilizerCode &s = file.stabilizer;
    j["kind"] = "stabilizer";
    j["generators"] = json::array();
    j["logical_x"] = json::array();
    j["logical_z"] = json::array();
    for (const auto &g : s.generators()) j["generators"].push_back(pauli_entry(g));
    for (const auto &p : s.logical_x) j["logical_x"].push_back(pauli_entry(p));
    for (const auto &p : s.logical_z) j["logical_z"].push_back(pauli_entry(p));
  }
  return j.dump(2) + "\n";
}

CodeFile load_code(const std::string &path_or_name) {
  if (!std::filesystem::exists(path_or_name)) {
    for (const auto &name : catalog_names()) {
      if (name == path_or_name) return CodeFile::from_css(catalog(name));
    }
    throw std::invalid_argument("no such file or catalog code: " + path_or_name);
  }
  std::ifstream in(path_or_name);
  std::stringstream buf;
  buf << in.rdbuf();
  if (!in && !in.eof()) {
    throw std::invalid_argument("cannot read " + path_or_name);
  }
  return parse_code_file(buf.str());
}

void save_code(const CodeFile &file, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  bool as_json = path.size() >= 5 && path.ends_with(".json");
  out << (as_json ? to_json(file) : to_text(file));
}

}  // namespace csst

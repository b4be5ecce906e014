#include "starspline/star_io.hpp"

#include <fstream>
#include <sstream>

#include "starspline/error.hpp"

namespace starspline {

namespace {

bool is_integer_token(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::string strip_plus(const std::string& s) { return !s.empty() && s[0] == '+' ? s.substr(1) : s; }

}  // namespace

Rational parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(token)) throw Error(Errc::ParseError, "not a rational: '" + token + "'");
    return Rational(Integer(strip_plus(token)));
  }
  const std::string num = token.substr(0, slash);
  const std::string den = token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+')
    throw Error(Errc::ParseError, "not a rational: '" + token + "'");
  const Integer d(den);
  if (d == 0) throw Error(Errc::ParseError, "zero denominator in '" + token + "'");
  return Rational(Integer(strip_plus(num)), d);
}

std::string format_rational(const Rational& q) {
  if (mp::denominator(q) == 1) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

VertexStar parse_star(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<StarKind> kind;
  std::vector<Vec3> vertices;
  std::vector<std::vector<std::size_t>> faces;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::vector<std::string> rest;
    for (std::string tok; ls >> tok;) rest.push_back(tok);
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tag == "kind") {
      if (kind || rest.size() != 1 || (rest[0] != "closed" && rest[0] != "open"))
        throw Error(Errc::ParseError, where + "expected a single 'kind closed|open'");
      kind = rest[0] == "closed" ? StarKind::Closed : StarKind::Open;
    } else if (tag == "v") {
      if (rest.size() != 3) throw Error(Errc::ParseError, where + "a vertex needs 3 coordinates");
      Vec3 v;
      for (int c = 0; c < 3; ++c) v(c) = parse_rational(rest[static_cast<std::size_t>(c)]);
      vertices.push_back(v);
    } else if (tag == "f") {
      if (rest.size() < 3) throw Error(Errc::ParseError, where + "a face needs at least 3 indices");
      std::vector<std::size_t> face;
      for (const auto& tok : rest) {
        if (!is_integer_token(tok) || tok[0] == '-' || tok[0] == '+')
          throw Error(Errc::ParseError, where + "bad face index '" + tok + "'");
        face.push_back(std::stoul(tok));
      }
      faces.push_back(std::move(face));
    } else {
      throw Error(Errc::ParseError, where + "unknown record '" + tag + "'");
    }
  }
  if (!kind) throw Error(Errc::ParseError, "missing 'kind' line");
  return build_star(std::move(vertices), std::move(faces), *kind);
}

VertexStar read_star_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot open star file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_star(buf.str());
}

std::string format_star(const VertexStar& star) {
  std::ostringstream out;
  out << "kind " << (star.closed() ? "closed" : "open") << '\n';
  for (const auto& v : star.link_vertices())
    out << "v " << format_rational(v(0)) << ' ' << format_rational(v(1)) << ' '
        << format_rational(v(2)) << '\n';
  for (const auto& f : star.link_faces()) {
    out << 'f';
    for (std::size_t i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

}  // namespace starspline

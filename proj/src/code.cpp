#include "peeltri/code.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace peeltri::map {

std::string canonical_code(const TriComplex& t) {
  switch (t.sentinel()) {
    case Sentinel::Vertex:
      return "T10";
    case Sentinel::Edge:
      return "T20";
    case Sentinel::VertexLoop:
      return "T110";
    case Sentinel::None:
      break;
  }
  int F = t.face_count();
  std::vector<int> bfs_index(static_cast<size_t>(F), -1);
  std::vector<int> entry(static_cast<size_t>(F), -1);  // entry side index per face
  std::vector<int> queue;
  bfs_index[static_cast<size_t>(t.root().face)] = 0;
  entry[static_cast<size_t>(t.root().face)] = t.root().side;
  queue.push_back(t.root().face);
  int next_index = 1;

  enum class Kind { New, Back, Hole };
  struct Tok {
    Kind kind;
    SideId side;  // the visited side
    int back;     // canonical position for Back
  };
  std::vector<Tok> toks;
  std::map<SideId, int> free_rank;  // free side -> visitation rank

  auto offset_of = [&](SideId s) {
    int f = face_of(s);
    return 3 * bfs_index[static_cast<size_t>(f)] +
           (index_of(s) - entry[static_cast<size_t>(f)] + 3) % 3;
  };

  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int f = queue[qi];
    int e = entry[static_cast<size_t>(f)];
    int first = (f == t.root().face && bfs_index[static_cast<size_t>(f)] == 0 && qi == 0) ? 0 : 1;
    for (int o = first; o < 3; ++o) {
      SideId s = side_id(f, (e + o) % 3);
      SideId g = t.glued_to(s);
      if (g == kFreeSide) {
        free_rank.emplace(s, static_cast<int>(free_rank.size()));
        toks.push_back({Kind::Hole, s, 0});
      } else if (bfs_index[static_cast<size_t>(face_of(g))] < 0) {
        bfs_index[static_cast<size_t>(face_of(g))] = next_index++;
        entry[static_cast<size_t>(face_of(g))] = index_of(g);
        queue.push_back(face_of(g));
        toks.push_back({Kind::New, s, 0});
      } else {
        toks.push_back({Kind::Back, s, offset_of(g)});
      }
    }
  }

  std::ostringstream os;
  if (!t.root().forward) os << "~.";
  bool sep = false;
  for (const Tok& tk : toks) {
    if (sep) os << ".";
    sep = true;
    switch (tk.kind) {
      case Kind::New:
        os << "N";
        break;
      case Kind::Back:
        os << "B" << tk.back;
        break;
      case Kind::Hole:
        os << "H" << free_rank.at(t.hole_successor(tk.side));
        break;
    }
  }
  return os.str();
}

TriComplex decode_code(const std::string& code) {
  if (code == "T10") return TriComplex::single_vertex();
  if (code == "T20") return TriComplex::single_edge();
  if (code == "T110") return TriComplex::vertex_loop();

  std::vector<std::string> toks;
  {
    std::string cur;
    for (char c : code) {
      if (c == '.') {
        toks.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    toks.push_back(cur);
  }
  bool forward = true;
  size_t ti = 0;
  if (!toks.empty() && toks[0] == "~") {
    forward = false;
    ti = 1;
  }

  // Decoded numbering: face i's sides are its canonical offsets; entry side is
  // side 0 and the root is (0, 0).
  std::vector<std::pair<SideId, SideId>> gluings;
  std::vector<SideId> free_sides;
  std::vector<int> succ_rank;
  int faces = 1;
  // pending side visits, in traversal order: (face, offset)
  std::vector<SideId> pending = {side_id(0, 0), side_id(0, 1), side_id(0, 2)};
  size_t pi = 0;
  for (; ti < toks.size(); ++ti, ++pi) {
    if (pi >= pending.size()) throw InvalidGluing("decode_code: too many tokens");
    SideId s = pending[pi];
    const std::string& tk = toks[ti];
    if (tk == "N") {
      int nf = faces++;
      gluings.emplace_back(s, side_id(nf, 0));
      pending.push_back(side_id(nf, 1));
      pending.push_back(side_id(nf, 2));
    } else if (tk.size() > 1 && tk[0] == 'B') {
      SideId o = std::stoi(tk.substr(1));
      bool dup = false;
      for (auto [a, b] : gluings)
        if ((a == s && b == o) || (a == o && b == s)) dup = true;
      if (!dup) gluings.emplace_back(s, o);
    } else if (tk.size() > 1 && tk[0] == 'H') {
      free_sides.push_back(s);
      succ_rank.push_back(std::stoi(tk.substr(1)));
    } else {
      throw InvalidGluing("decode_code: bad token '" + tk + "'");
    }
  }
  if (pi != pending.size()) throw InvalidGluing("decode_code: too few tokens");

  // hole cycles from the successor ranks
  std::vector<std::vector<SideId>> holes;
  std::vector<char> done(free_sides.size(), 0);
  for (size_t i = 0; i < free_sides.size(); ++i) {
    if (done[i]) continue;
    std::vector<SideId> cycle;
    size_t j = i;
    while (!done[j]) {
      done[j] = 1;
      cycle.push_back(free_sides[j]);
      int nj = succ_rank[j];
      if (nj < 0 || nj >= static_cast<int>(free_sides.size()))
        throw InvalidGluing("decode_code: hole successor out of range");
      j = static_cast<size_t>(nj);
    }
    if (j != i) throw InvalidGluing("decode_code: hole successors are not a permutation");
    holes.push_back(std::move(cycle));
  }
  return TriComplex::build(faces, gluings, {0, 0, forward}, holes);
}

}  // namespace peeltri::map

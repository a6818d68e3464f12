#pragma once

// Named gallery instances as algebra files: "name", "name(a,b)" or "name:a,b".

#include <charconv>

#include "gradlie/gallery_assoc.hpp"
#include "gradlie/gallery_jordan.hpp"
#include "gradlie/io.hpp"

namespace gradlie::gallery {

struct GalleryRef {
  std::string name;
  std::vector<std::size_t> args;
};

inline GalleryRef parse_gallery_name(const std::string& text) {
  GalleryRef ref;
  std::string rest;
  if (auto open = text.find('('); open != std::string::npos) {
    if (text.back() != ')') throw ParseError("gallery name: missing ')' in \"" + text + "\"");
    ref.name = text.substr(0, open);
    rest = text.substr(open + 1, text.size() - open - 2);
  } else if (auto colon = text.find(':'); colon != std::string::npos) {
    ref.name = text.substr(0, colon);
    rest = text.substr(colon + 1);
  } else {
    ref.name = text;
  }
  std::stringstream ss(rest);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || p != item.data() + item.size())
      throw ParseError("gallery name: bad parameter \"" + item + "\" in \"" + text + "\"");
    ref.args.push_back(v);
  }
  return ref;
}

struct GalleryEntry {
  const char* name;
  std::size_t arity;
  const char* summary;
};

inline const std::vector<GalleryEntry>& gallery_entries() {
  static const std::vector<GalleryEntry> entries = {
      {"sl2", 0, "sl_2 on e12, e21, h with degrees 1, -1, 0"},
      {"sl2sum", 0, "sl_2 (+) sl_2, both copies 3-graded"},
      {"heis3", 0, "Heisenberg algebra [x, y] = z with degrees 1, -1, 0"},
      {"gl2", 0, "gl_2 with L_0 = span{h, 1}; not Jordan 3-graded"},
      {"sln_e11", 1, "sl_n 3-graded by the idempotent e11"},
      {"p_mod_i", 0, "realified C[x]/(x^4) with the conjugate bracket and subalgebra L"},
      {"m_n_transpose", 1, "M_n with the transpose involution"},
      {"pair_field", 0, "Jordan pair (F, F) with {x, y, z} = 2xyz"},
      {"pair_rect", 2, "rectangular pair (M_pxq, M_qxp) with {x, y, z} = xyz + zyx"},
      {"pair_zero", 0, "zero-product pair of dimensions (1, 1)"},
      {"pair_padded", 0, "(F^2, F^2) with products on first coordinates, subpair = first coordinates"},
      {"triple_field", 0, "Jordan triple F with {x, y, z} = 2xyz"},
      {"jalg_field", 0, "Jordan algebra F with x o y = xy"},
      {"jalg_sym2", 0, "Sym_2 with x o y = (xy + yx) / 2"},
  };
  return entries;
}

inline constexpr std::size_t kMaxGalleryParameter = 8;

/// The file for a gallery name over the given field.
inline io::Json gallery_json(const std::string& text, FieldTag f = FieldTag::rationals()) {
  const auto ref = parse_gallery_name(text);
  const auto& entries = gallery_entries();
  auto it = std::find_if(entries.begin(), entries.end(), [&](const GalleryEntry& e) { return ref.name == e.name; });
  if (it == entries.end()) throw ParseError("unknown gallery name \"" + ref.name + "\"");
  if (ref.args.size() != it->arity)
    throw ParseError("gallery " + ref.name + " takes " + std::to_string(it->arity) + " parameter(s)");
  for (auto a : ref.args)
    if (a == 0 || a > kMaxGalleryParameter)
      throw DimensionTooLarge("gallery parameters must lie in 1.." + std::to_string(kMaxGalleryParameter));
  const auto& a = ref.args;
  return io::with_field(f, [&]<class K>(FieldTag fld) -> io::Json {
    const auto& n = ref.name;
    if (n == "sl2") return io::lie_json(sl2<K>(fld));
    if (n == "sl2sum") return io::lie_json(sl2sum<K>(fld));
    if (n == "heis3") return io::lie_json(heis3<K>(fld));
    if (n == "gl2") return io::lie_json(gl2<K>(fld));
    if (n == "sln_e11") {
      if (a[0] < 2) throw DimensionMismatch("sln_e11 needs n >= 2");
      return io::lie_json(sln_e11<K>(fld, a[0]));
    }
    if (n == "p_mod_i") return io::lie_json(p_mod_i<K>(fld), std::optional(p_mod_i_subalgebra<K>(fld)));
    if (n == "m_n_transpose") return io::assoc_json(m_n_transpose<K>(fld, a[0]));
    if (n == "pair_field") return io::pair_json(pair_field<K>(fld));
    if (n == "pair_rect") return io::pair_json(pair_rect<K>(fld, a[0], a[1]));
    if (n == "pair_zero") return io::pair_json(pair_zero<K>(fld));
    if (n == "pair_padded") return io::pair_json(pair_padded<K>(fld), std::optional(pair_padded_subpair<K>(fld)));
    if (n == "triple_field") return io::triple_json(triple_field<K>(fld));
    if (n == "jalg_field") return io::jordan_algebra_json(jalg_field<K>(fld));
    return io::jordan_algebra_json(jalg_sym2<K>(fld));
  });
}

}  // namespace gradlie::gallery

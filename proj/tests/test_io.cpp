#include <doctest.h>

#include <algorithm>

#include "kreweras/json_io.hpp"
#include "kreweras/svg.hpp"
#include "kreweras/web.hpp"
#include "kreweras/word.hpp"

using namespace kreweras;
using nlohmann::json;

TEST_CASE("word JSON schema") {
  json j = word_to_json(KrewerasWord::parse("AABBCACCB"));
  CHECK(j["n"] == 3);
  CHECK(j["word"] == "AABBCACCB");
  CHECK(word_from_json(j).str() == "AABBCACCB");
  CHECK_THROWS(word_from_json(json{{"n", 2}, {"word", "AABBCACCB"}}));
}

TEST_CASE("bump JSON carries arcs and exact crossing data") {
  json j = bump_to_json(bump_diagram(KrewerasWord::parse("AABBCACCB")));
  CHECK(j["arcs"].size() == 6);
  CHECK(j["crossings"].size() == 5);
  for (const auto& c : j["crossings"]) {
    CHECK((c["kind"] == "interior" || c["kind"] == "boundary"));
    CHECK(c["x"].size() == 2);
  }
}

TEST_CASE("web JSON round-trips through parsing") {
  auto [w, col] = web_from_word(KrewerasWord::parse("AABBCACCB"));
  json j = web_to_json(w, &col);
  Web back = web_from_json(j);
  CHECK(canonical_form(back) == canonical_form(w));
  CHECK(j["edge_colors"].size() == w.edge_count());

  json plain = web_to_json(w);
  CHECK_FALSE(plain.contains("edge_colors"));
  CHECK(canonical_form(web_from_json(plain)) == canonical_form(w));
}

TEST_CASE("recovery works on a web parsed back from JSON") {
  auto [w, col] = web_from_word(KrewerasWord::parse("ABCABC"));
  Web back = web_from_json(web_to_json(w));
  std::vector<KrewerasWord> words = recover_words(back);
  CHECK(words.size() == 4);  // two components
  CHECK(std::find(words.begin(), words.end(), KrewerasWord::parse("ABCABC")) != words.end());
}

TEST_CASE("growth text dump marks one fill per row") {
  GrowthWindow g = growth_window(KrewerasWord::parse("ABC"), 3);
  std::string text = growth_to_text(g);
  CHECK(text.find("000 100 110 111") != std::string::npos);
  size_t stars = 0;
  for (size_t p = text.find('*'); p != std::string::npos; p = text.find('*', p + 1)) ++stars;
  CHECK(stars == 2 * 3);  // two stars around each of three fills
}

TEST_CASE("SVG output is deterministic and well-formed") {
  BumpDiagram d = bump_diagram(KrewerasWord::parse("AABBCACCB"));
  std::string svg1 = bump_to_svg(d);
  CHECK(svg1 == bump_to_svg(d));
  CHECK(svg1.rfind("<?xml", 0) == 0);
  CHECK(svg1.find("stroke-dasharray") != std::string::npos);  // crimson arcs are dashed
  CHECK(svg1.find("</svg>") != std::string::npos);

  auto [w, col] = web_from_word(KrewerasWord::parse("AABBCACCB"));
  std::string svg2 = web_to_svg(w, &col, 11);
  CHECK(svg2 == web_to_svg(w, &col, 11));
  CHECK(svg2.find("</svg>") != std::string::npos);
}

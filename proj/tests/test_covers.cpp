#include <doctest.h>

#include <random>

#include "centracover/catalog.hpp"
#include "centracover/covers.hpp"
#include "oracle.hpp"

using namespace centracover;

namespace {

CoverFamily all_centralizers(const CentralizerAtlas& atlas) {
  std::vector<int> ids(atlas.size());
  for (int i = 0; i < atlas.size(); ++i) ids[i] = i;
  return CoverFamily{ids, FamilySide::Centralizers};
}

}  // namespace

TEST_CASE("the full centralizer family covers every nonabelian group") {
  for (const std::string& name : catalog_names()) {
    Group g = catalog_build(name);
    CentralizerAtlas atlas = CentralizerAtlas::build(g);
    CHECK(is_cover(atlas, all_centralizers(atlas)).is_cover);
  }
}

TEST_CASE("the three D8 centralizers of s4 miss the 3-cycles") {
  Group s4 = catalog_build("s4");
  CentralizerAtlas atlas = CentralizerAtlas::build(s4);
  std::vector<int> d8s;
  for (const AtlasEntry& e : atlas.entries()) {
    if (e.centralizer.order() == 8) d8s.push_back(e.id);
  }
  REQUIRE(d8s.size() == 3);
  const CoverVerdict verdict =
      is_cover(atlas, CoverFamily{d8s, FamilySide::Centralizers});
  CHECK_FALSE(verdict.is_cover);
  REQUIRE(verdict.uncovered_witness.has_value());
  CHECK(s4.element_order(*verdict.uncovered_witness) == 3);
}

TEST_CASE("all four centralizers of s3 cover") {
  Group s3 = catalog_build("s3");
  CentralizerAtlas atlas = CentralizerAtlas::build(s3);
  CHECK(atlas.size() == 4);
  CHECK(is_cover(atlas, all_centralizers(atlas)).is_cover);
}

TEST_CASE("family validation errors") {
  Group q8 = catalog_build("q8");
  CentralizerAtlas atlas = CentralizerAtlas::build(q8);
  try {
    is_cover(atlas, CoverFamily{{}, FamilySide::Centralizers});
    FAIL("expected EmptyFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::EmptyFamily);
  }
  CHECK_THROWS_AS(is_cover(atlas, CoverFamily{{0, 0}, FamilySide::Centralizers}),
                  Error);
  CHECK_THROWS_AS(is_cover(atlas, CoverFamily{{7}, FamilySide::Centralizers}),
                  Error);
  try {
    is_irredundant_cover(atlas, CoverFamily{{0}, FamilySide::Centralizers});
    FAIL("expected NotACover");
  } catch (const Error& e) {
    CHECK(e.code() == Error::Code::NotACover);
  }
}

TEST_CASE("s4 irredundance of the canonical families") {
  Group s4 = catalog_build("s4");
  CentralizerAtlas atlas = CentralizerAtlas::build(s4);

  const CoverVerdict max7 =
      is_irredundant_cover(atlas, maximal_centralizer_cover(atlas));
  CHECK(max7.is_cover);
  CHECK(*max7.is_irredundant);

  const CoverVerdict min10 =
      is_irredundant_cover(atlas, minimal_centralizer_cover(atlas));
  CHECK(min10.is_cover);
  CHECK(*min10.is_irredundant);

  const CoverVerdict all13 = is_irredundant_cover(atlas, all_centralizers(atlas));
  CHECK(all13.is_cover);
  CHECK_FALSE(*all13.is_irredundant);
  CHECK(all13.redundant_member.has_value());

  // Every C4 centralizer is individually removable from the full family.
  for (const AtlasEntry& e : atlas.entries()) {
    if (e.centralizer.order() != 4 || !e.centralizer_minimal) continue;
    if (s4.element_order(e.representative) != 4) continue;
    std::vector<int> rest;
    for (int i = 0; i < atlas.size(); ++i) {
      if (i != e.id) rest.push_back(i);
    }
    CHECK(family_covers(atlas, rest, FamilySide::Centralizers));
  }
}

TEST_CASE("center cover uniqueness") {
  SUBCASE("q8: the three centers are the unique irredundant cover") {
    Group q8 = catalog_build("q8");
    CentralizerAtlas atlas = CentralizerAtlas::build(q8);
    const UniquenessResult r = center_cover_uniqueness(atlas, 20);
    CHECK(r.holds);
    CHECK(r.exhaustive);
    CHECK(maximal_center_ids(atlas).size() == 3);
  }
  SUBCASE("s3: all four centers needed") {
    Group s3 = catalog_build("s3");
    CentralizerAtlas atlas = CentralizerAtlas::build(s3);
    const UniquenessResult r = center_cover_uniqueness(atlas, 20);
    CHECK(r.holds);
    CHECK(r.exhaustive);
    CHECK(maximal_center_ids(atlas).size() == 4);
  }
  SUBCASE("s4: exhaustive over 2^13 subsets") {
    Group s4 = catalog_build("s4");
    CentralizerAtlas atlas = CentralizerAtlas::build(s4);
    const UniquenessResult r = center_cover_uniqueness(atlas, 20);
    CHECK(r.holds);
    CHECK(r.exhaustive);
  }
  SUBCASE("criterion mode above the cap") {
    Group s4 = catalog_build("s4");
    CentralizerAtlas atlas = CentralizerAtlas::build(s4);
    const UniquenessResult r = center_cover_uniqueness(atlas, 4);
    CHECK(r.holds);
    CHECK_FALSE(r.exhaustive);
  }
}

TEST_CASE("the maximal-center containment criterion") {
  Group s4 = catalog_build("s4");
  CentralizerAtlas atlas = CentralizerAtlas::build(s4);

  std::vector<int> d8s;
  for (const AtlasEntry& e : atlas.entries()) {
    if (e.centralizer.order() == 8) d8s.push_back(e.id);
  }
  CHECK_FALSE(cover_criterion(atlas, CoverFamily{d8s, FamilySide::Centralizers}));
  CHECK(cover_criterion(atlas, maximal_centralizer_cover(atlas)));

  // Criterion matches the cover test on random families.
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> ids;
    for (int i = 0; i < atlas.size(); ++i) {
      if (rng() & 1) ids.push_back(i);
    }
    if (ids.empty()) continue;
    CHECK(cover_criterion(atlas, CoverFamily{ids, FamilySide::Centralizers}) ==
          family_covers(atlas, ids, FamilySide::Centralizers));
  }
}

TEST_CASE("irredundant size bound") {
  SUBCASE("s4: bound 10, observed at most 10") {
    Group s4 = catalog_build("s4");
    CentralizerAtlas atlas = CentralizerAtlas::build(s4);
    const SizeBoundResult r = irredundant_size_bound(atlas);
    CHECK(r.bound == 10);
    CHECK(r.complete);
    CHECK(r.covers_found > 0);
    CHECK(r.max_observed <= 10);
  }
  SUBCASE("q8: the unique irredundant cover has size 3") {
    Group q8 = catalog_build("q8");
    CentralizerAtlas atlas = CentralizerAtlas::build(q8);
    const SizeBoundResult r = irredundant_size_bound(atlas);
    CHECK(r.bound == 3);
    CHECK(r.covers_found == 1);
    CHECK(r.max_observed == 3);
  }
  SUBCASE("CA-groups: the whole family is irredundant of size m") {
    for (const char* name : {"s3", "frob21", "heis27"}) {
      Group g = catalog_build(name);
      CentralizerAtlas atlas = CentralizerAtlas::build(g);
      const SizeBoundResult r = irredundant_size_bound(atlas);
      CHECK(r.bound == atlas.size());
      CHECK(r.max_observed == atlas.size());
    }
  }
  SUBCASE("partial enumeration is reported") {
    Group g = catalog_build("s4");
    CentralizerAtlas atlas = CentralizerAtlas::build(g);
    const SizeBoundResult r = irredundant_size_bound(atlas, 50);
    CHECK_FALSE(r.complete);
  }
}

TEST_CASE("cover monotonicity") {
  Group s4 = catalog_build("s4");
  CentralizerAtlas atlas = CentralizerAtlas::build(s4);
  std::mt19937_64 rng(kDefaultSeed);
  const std::vector<int> base = atlas.maximal_centralizer_ids();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> ids = base;
    for (int i = 0; i < atlas.size(); ++i) {
      if ((rng() & 3) == 0 &&
          std::find(ids.begin(), ids.end(), i) == ids.end()) {
        ids.push_back(i);
      }
    }
    CHECK(family_covers(atlas, ids, FamilySide::Centralizers));
  }
}

TEST_CASE("cover verdicts agree with the naive oracle") {
  std::mt19937_64 rng(kDefaultSeed);
  for (const char* name : {"s3", "s4", "q8", "sl2_3", "es32_plus"}) {
    Group g = catalog_build(name);
    CentralizerAtlas atlas = CentralizerAtlas::build(g);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> ids;
      std::vector<oracle::ElementSet> sets;
      for (int i = 0; i < atlas.size(); ++i) {
        if (rng() & 1) {
          ids.push_back(i);
          const auto elems = atlas.entry(i).centralizer.elements();
          sets.emplace_back(elems.begin(), elems.end());
        }
      }
      if (ids.empty()) continue;
      CHECK(family_covers(atlas, ids, FamilySide::Centralizers) ==
            oracle::is_cover(g, sets));
      if (oracle::is_cover(g, sets)) {
        CHECK(family_irredundant(atlas, ids, FamilySide::Centralizers) ==
              oracle::is_irredundant_cover(g, sets));
      }
    }
  }
}

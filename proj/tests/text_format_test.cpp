#include <gtest/gtest.h>

#include <sstream>

#include "eblab/config.hpp"
#include "eblab/error.hpp"
#include "eblab/text_format.hpp"

using namespace eblab;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

Bundle read(const std::string& text) {
  std::istringstream in(text);
  return read_bundle(in);
}

}  // namespace

TEST(Bundle, HandWrittenAlgebra) {
  const Bundle b = read(R"(# two-element chain
algebra two
size 2
meet
0 0
0 1
join 0 1 1 1
mult
0 0 0 1   # wrapped
impl
1 1
0 1
end
structure id over two
forall 0 1
exists 0 1
end
frame f over two
worlds 2
pi 1 0
end
)");
  const Algebra a = b.algebra();
  EXPECT_TRUE(a.same_tables(mv_chain(2)));
  EXPECT_EQ(a.name(), "two");
  EXPECT_EQ(b.structure("id").forall_table(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(b.frame("f").pi(), (std::vector<Elem>{1, 0}));
  EXPECT_EQ(b.find_structure("nope"), nullptr);
  EXPECT_EQ(kind_of([&] { b.structure("nope"); }), ErrorKind::malformed_input);
}

TEST(Bundle, RoundTrip) {
  const Bundle src = builtin_bundle("mv:4");
  std::ostringstream out;
  const Algebra a = src.algebra();
  write_algebra(out, a.tables());
  for (const auto& s : src.structures) {
    write_structure(out, src.structure(s.name), s.name, a.name());
  }
  const PossibilisticFrame frame(a, {3, 2}, "f");
  write_frame(out, frame, "f", a.name());

  const Bundle back = read(out.str());
  EXPECT_TRUE(back.algebra().same_tables(a));
  ASSERT_EQ(back.structures.size(), src.structures.size());
  for (const auto& s : src.structures) {
    EXPECT_TRUE(back.structure(s.name).same_operators(src.structure(s.name))) << s.name;
  }
  EXPECT_EQ(back.frame("f").pi(), frame.pi());
}

TEST(Bundle, Errors) {
  EXPECT_EQ(kind_of([] { read("algebra a\nsize 2\nmeet 0 0 0\nend\n"); }),
            ErrorKind::malformed_input);
  EXPECT_EQ(kind_of([] { read("bogus\n"); }), ErrorKind::malformed_input);
  EXPECT_EQ(kind_of([] { read("algebra a\nsize x\n"); }), ErrorKind::malformed_input);
  try {
    read("algebra a\nsize 2\nmeet 0 0 0 1\njoin 0 1 1 1\nmult 0 0 0 1\nimpl 1 1 0 q\nend\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line"), std::string::npos) << e.what();
  }
  // Tables that parse but are not BL fail on validation.
  const Bundle bad = read("algebra a\nsize 2\nmeet 0 0 0 1\njoin 0 1 1 1\nmult 0 0 0 1\nimpl 1 0 0 1\nend\n");
  EXPECT_EQ(kind_of([&] { bad.algebra(); }), ErrorKind::not_bl);
  // Operators that are not epistemic fail on validation.
  const Bundle s = read(
      "algebra a\nsize 2\nmeet 0 0 0 1\njoin 0 1 1 1\nmult 0 0 0 1\nimpl 1 1 0 1\nend\n"
      "structure s over a\nforall 0 0\nexists 0 1\nend\n");
  EXPECT_EQ(kind_of([&] { s.structure("s"); }), ErrorKind::not_ebl);
}

TEST(Builtin, Specs) {
  EXPECT_TRUE(builtin_algebra("mv:4").same_tables(mv_chain(4)));
  EXPECT_TRUE(builtin_algebra("godel:3").same_tables(godel_chain(3)));
  EXPECT_TRUE(builtin_algebra("bool:2").same_tables(boolean_algebra(2)));
  EXPECT_TRUE(builtin_algebra("osum:mv2+mv3")
                  .same_tables(ordinal_sum({{mv_chain(2), mv_chain(3)}})));
  EXPECT_TRUE(builtin_algebra("prod:godel2xgodel3")
                  .same_tables(direct_product(godel_chain(2), godel_chain(3))));
  for (const char* bad : {"mv:1", "mv:x", "heyting:3", "osum:bool2+mv2", "prod:", "mv4"}) {
    EXPECT_THROW(builtin_algebra(bad), Error) << bad;
  }
}

TEST(Builtin, NamedStructures) {
  const Bundle b = builtin_bundle("mv:4");
  const EpistemicStructure paper = b.structure("paper");
  EXPECT_EQ(paper.forall_table(), (std::vector<Elem>{0, 0, 3, 3}));
  EXPECT_EQ(b.structure("crisp").forall_table(), (std::vector<Elem>{0, 0, 0, 3}));
  EXPECT_EQ(b.structure("identity").forall_table(), (std::vector<Elem>{0, 1, 2, 3}));
  EXPECT_EQ(b.structures.size(), 3u);
  const Bundle g = builtin_bundle("godel:3");
  EXPECT_EQ(g.structures.size(), 3u);
  EXPECT_EQ(g.find_structure("paper"), nullptr);
  EXPECT_NE(g.find_structure("s2"), nullptr);
}

TEST(ElementList, Parse) {
  EXPECT_EQ(parse_element_list("1,2"), (std::vector<Elem>{1, 2}));
  EXPECT_EQ(parse_element_list("3"), (std::vector<Elem>{3}));
  EXPECT_THROW(parse_element_list("1,,2"), Error);
  EXPECT_THROW(parse_element_list("a"), Error);
}

TEST(Config, Defaults) {
  const RunConfig c;
  EXPECT_EQ(c.size_cap, 4096u);
  EXPECT_EQ(c.mode, OutputMode::both);
  EXPECT_EQ(c.method, EnumerationMethod::pairs);
  EXPECT_GE(c.effective_workers(), 1u);
}

TEST(Config, ReadKeys) {
  std::istringstream in("# settings\nsize-cap = 100\nworker-count=3\n\noutput-mode = machine\nmethod = both # cross-check\n");
  const RunConfig c = read_config(in);
  EXPECT_EQ(c.size_cap, 100u);
  EXPECT_EQ(c.workers, 3u);
  EXPECT_EQ(c.effective_workers(), 3u);
  EXPECT_EQ(c.mode, OutputMode::machine);
  EXPECT_EQ(c.method, EnumerationMethod::both);
}

TEST(Config, Errors) {
  for (const char* bad : {"size-cap = -1\n", "colour = red\n", "method = fast\n", "size-cap\n",
                          "output-mode = loud\n", "worker-count = 2x\n"}) {
    std::istringstream in(bad);
    EXPECT_EQ(kind_of([&] { read_config(in); }), ErrorKind::malformed_input) << bad;
  }
  EXPECT_FALSE(parse_output_mode("quiet").has_value());
  EXPECT_EQ(parse_method("brute"), EnumerationMethod::brute);
}

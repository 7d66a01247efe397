import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  highlightLine,
  renderSource,
} from "../src/highlight.js";

describe("escapeHtml", () => {
  it("escapes markup characters", () => {
    expect(escapeHtml('a < b && c > "d"')).toBe(
      "a &lt; b &amp;&amp; c &gt; &quot;d&quot;",
    );
  });
});

describe("highlightLine", () => {
  it("marks keywords", () => {
    expect(highlightLine("if (x) return;")).toBe(
      '<span class="tok-kw">if</span> (x) <span class="tok-kw">return</span>;',
    );
  });

  it("marks strings and keeps escaping inside them", () => {
    const html = highlightLine('s = "a<b";');
    expect(html).toContain('<span class="tok-str">&quot;a&lt;b&quot;</span>');
  });

  it("marks numbers and comments", () => {
    const html = highlightLine("int n = 42; // answer");
    expect(html).toContain('<span class="tok-num">42</span>');
    expect(html).toContain('<span class="tok-comment">// answer</span>');
  });

  it("does not treat identifiers as keywords", () => {
    expect(highlightLine("iffy(whileLoop)")).toBe("iffy(whileLoop)");
  });

  it("is resilient to regex metacharacters in source", () => {
    expect(() => highlightLine("a[i] = (b * 2) ^ c;")).not.toThrow();
  });
});

describe("renderSource", () => {
  it("numbers lines from the given start", () => {
    const html = renderSource(["int a;", "int b;"], 7, new Map());
    expect(html).toContain('<td class="lineno">7</td>');
    expect(html).toContain('<td class="lineno">8</td>');
    expect(html).toContain('data-line="8"');
  });

  it("applies line marks with titles", () => {
    const marks = new Map([
      [5, { cssClass: "tagged", title: 'if: x != "y"' }],
    ]);
    const html = renderSource(["if (x) {"], 5, marks);
    expect(html).toContain('class="tagged"');
    expect(html).toContain("title=\"if: x != &quot;y&quot;\"");
  });
});

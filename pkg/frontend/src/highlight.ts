// Purely lexical highlighting for the code panes. No parsing: a single
// token scan good enough for keywords, literals, and comments.

const KEYWORDS = new Set([
  "abstract", "boolean", "break", "byte", "case", "catch", "char", "class",
  "const", "continue", "default", "do", "double", "else", "enum", "extends",
  "final", "finally", "float", "for", "if", "implements", "import",
  "instanceof", "int", "interface", "long", "native", "new", "package",
  "private", "protected", "public", "return", "short", "static", "super",
  "switch", "synchronized", "this", "throw", "throws", "transient", "try",
  "void", "volatile", "while", "true", "false", "null",
]);

const TOKEN = new RegExp(
  [
    String.raw`(?<comment>//[^\n]*|/\*[\s\S]*?\*/)`,
    String.raw`(?<str>"(?:\\.|[^"\\])*")`,
    String.raw`(?<num>\b\d[\w.]*)`,
    String.raw`(?<word>\b[A-Za-z_$][\w$]*\b)`,
  ].join("|"),
  "g",
);

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** One line of source to HTML with token classes. */
export function highlightLine(line: string): string {
  let out = "";
  let last = 0;
  TOKEN.lastIndex = 0;
  for (const m of line.matchAll(TOKEN)) {
    out += escapeHtml(line.slice(last, m.index));
    const g = m.groups ?? {};
    const text = m[0];
    if (g.comment !== undefined) {
      out += `<span class="tok-comment">${escapeHtml(text)}</span>`;
    } else if (g.str !== undefined) {
      out += `<span class="tok-str">${escapeHtml(text)}</span>`;
    } else if (g.num !== undefined) {
      out += `<span class="tok-num">${escapeHtml(text)}</span>`;
    } else if (KEYWORDS.has(text)) {
      out += `<span class="tok-kw">${escapeHtml(text)}</span>`;
    } else {
      out += escapeHtml(text);
    }
    last = (m.index ?? 0) + text.length;
  }
  return out + escapeHtml(line.slice(last));
}

export interface LineMark {
  cssClass: string;
  title?: string;
}

/**
 * Render method source as a table of numbered, highlighted lines.
 * `marks` tags whole lines (annotation highlights work line-wise; the
 * spans we get from the API are statement-level anyway).
 */
export function renderSource(
  lines: string[],
  firstLine: number,
  marks: Map<number, LineMark>,
): string {
  const rows = lines.map((line, i) => {
    const no = firstLine + i;
    const mark = marks.get(no);
    const cls = mark ? ` class="${mark.cssClass}"` : "";
    const title = mark?.title ? ` title="${escapeHtml(mark.title)}"` : "";
    return (
      `<tr${cls}${title} data-line="${no}">` +
      `<td class="lineno">${no}</td>` +
      `<td class="code">${highlightLine(line)}</td></tr>`
    );
  });
  return `<table class="source">${rows.join("")}</table>`;
}

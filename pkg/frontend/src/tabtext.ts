/**
 * Monospace tablature rendering from the structured notes payload.
 *
 * Mirrors the server's normative layout byte for byte: six rows top-down
 * e B G D A E prefixed `<label>|`; per measure each note fills a cell as
 * wide as the measure's widest fret number (right-aligned, `-`-padded),
 * cells joined by `--`, the measure framed by `--` and closed with `|`;
 * a chord-name row above, names aligned to measure starts.
 */

import type { NotesDocument } from "./types.js";

const STRING_LABELS = ["e", "B", "G", "D", "A", "E"];

export function renderTabText(doc: NotesDocument): string {
  const { chords, npm, notes } = doc;
  const ordered = [...notes].sort((a, b) => a.slot - b.slot);
  const rowBodies: string[][] = Array.from({ length: 6 }, () => []);
  const measureStarts: number[] = [];
  let cursor = 2; // past the "X|" row prefix

  for (let m = 0; m < chords.length; m++) {
    const measureNotes = ordered.slice(m * npm, (m + 1) * npm);
    const width = Math.max(...measureNotes.map((n) => String(n.fret).length));
    measureStarts.push(cursor);
    let bodyLength = 0;
    for (let row = 0; row < 6; row++) {
      const stringIdx = 5 - row;
      const cells = measureNotes.map((n) =>
        n.stringIdx === stringIdx
          ? String(n.fret).padStart(width, "-")
          : "-".repeat(width),
      );
      const body = "--" + cells.join("--") + "--";
      rowBodies[row]!.push(body);
      bodyLength = body.length;
    }
    cursor += bodyLength + 1;
  }

  const stringRows = rowBodies.map(
    (bodies, row) => STRING_LABELS[row] + "|" + bodies.join("|") + "|",
  );

  const chordCells: string[] = new Array(stringRows[0]!.length).fill(" ");
  let pen = 0;
  chords.forEach((name, m) => {
    const at = Math.max(measureStarts[m]!, pen);
    for (let k = 0; k < name.length; k++) {
      if (at + k < chordCells.length) chordCells[at + k] = name[k]!;
    }
    pen = at + name.length + 1;
  });
  const chordRow = chordCells.join("").replace(/[ ]+$/, "");

  return [chordRow, ...stringRows].join("\n") + "\n";
}

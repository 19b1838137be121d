import { describe, expect, it } from "vitest";

import { PracticeSession } from "../src/session";
import { loadFixture, makeFetch } from "./helpers";

describe("dislike-and-regenerate loop", () => {
  it("changes the disliked measure's shape when preference weight is 1", async () => {
    const before = loadFixture("flip_before");
    const feedback = loadFixture("flip_feedback");
    const after = loadFixture("flip_after");
    const { fetchImpl, calls } = makeFetch([
      { body: before.response },
      { body: feedback.response },
      { body: after.response },
    ]);
    const session = new PracticeSession(fetchImpl);

    const first = await session.generate(before.request as any);
    const disliked = first.shapes[1]!.fingerprint;
    await session.feedback(disliked, "dislike");
    expect(session.pendingVerdicts.get(disliked)).toBe("dislike");

    const second = await session.regenerate();
    // the regenerate request pins the seed that was actually used
    expect(calls[2]!.url).toBe("/api/generate");
    expect(calls[2]!.body.seed).toBe(first.seedUsed);

    expect(second.shapes[1]!.fingerprint).not.toBe(disliked);
    expect(session.changedShapes(first)[1]).toBe(true);
    expect(session.pendingVerdicts.size).toBe(0); // cleared on regenerate
  });

  it("leaves output unchanged when preference weight is 0", async () => {
    const before = loadFixture("zero_before");
    const after = loadFixture("zero_after");
    const { fetchImpl } = makeFetch([
      { body: before.response },
      { body: { fingerprint: "0".repeat(16), likes: 0, dislikes: 5 } },
      { body: after.response },
    ]);
    const session = new PracticeSession(fetchImpl);

    const first = await session.generate(before.request as any);
    await session.feedback(first.shapes[0]!.fingerprint, "dislike");
    const second = await session.regenerate();

    expect(second.tab).toBe(first.tab);
    expect(second).toEqual(first);
    expect(session.changedShapes(first)).toEqual([false, false]);
  });

  it("new take drops the pinned seed", async () => {
    const basic = loadFixture("basic");
    const { fetchImpl, calls } = makeFetch([
      { body: basic.response },
      { body: basic.response },
    ]);
    const session = new PracticeSession(fetchImpl);
    await session.generate({ progression: "Amin7, D7", npm: 4, seed: 7 });
    await session.newTake();
    expect(calls[1]!.body.seed).toBeUndefined();
  });

  it("refuses to regenerate before any generation", async () => {
    const session = new PracticeSession(makeFetch([]).fetchImpl);
    await expect(session.regenerate()).rejects.toThrow();
  });
});

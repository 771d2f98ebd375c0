import { expect, test } from "vitest";

import { SlideshowPreview } from "../src/preview.js";
import type { ManifestScene } from "../src/types.js";

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

function scenes(...durations: number[]): ManifestScene[] {
  return durations.map((duration_s, i) => ({
    image: `images/scene_${i}.png`,
    text: `scene ${i}`,
    duration_s,
    positivity: 50,
  }));
}

function run(slides: ManifestScene[]) {
  const shown: number[] = [];
  let finished: (elapsedMs: number) => void;
  const done = new Promise<number>((resolve) => {
    finished = resolve;
  });
  const preview = new SlideshowPreview(slides, {
    onScene: (index) => shown.push(index),
    onDone: (elapsedMs) => finished(elapsedMs),
  });
  return { preview, shown, done };
}

test("plays scenes in order and reports the elapsed time", async () => {
  const slides = scenes(0.1, 0.1, 0.1);
  const { preview, shown, done } = run(slides);
  preview.start();
  expect(preview.isRunning).toBe(true);
  const elapsed = await done;
  expect(shown).toEqual([0, 1, 2]);
  expect(preview.isRunning).toBe(false);
  // scheduling is anchored to the start timestamp, so the run stays
  // within the tolerance no matter how many boundaries fired
  expect(Math.abs(elapsed - 300)).toBeLessThanOrEqual(100);
});

test("timer jitter does not accumulate across many short scenes", async () => {
  const slides = scenes(0.05, 0.05, 0.05, 0.05, 0.05, 0.05);
  const { preview, shown, done } = run(slides);
  preview.start();
  const elapsed = await done;
  expect(shown).toEqual([0, 1, 2, 3, 4, 5]);
  expect(Math.abs(elapsed - 300)).toBeLessThanOrEqual(100);
});

test("stop cancels the pending boundary", async () => {
  const shown: number[] = [];
  let doneCalls = 0;
  const preview = new SlideshowPreview(scenes(0.05, 0.05), {
    onScene: (index) => shown.push(index),
    onDone: () => {
      doneCalls += 1;
    },
  });
  preview.start();
  preview.stop();
  await sleep(200);
  expect(shown).toEqual([0]);
  expect(doneCalls).toBe(0);
  expect(preview.isRunning).toBe(false);
});

test("start is idempotent while running", async () => {
  const slides = scenes(0.08);
  const { preview, shown, done } = run(slides);
  preview.start();
  preview.start();
  await done;
  expect(shown).toEqual([0]);
});

test("refuses an empty manifest", () => {
  expect(
    () => new SlideshowPreview([], { onScene: () => undefined, onDone: () => undefined }),
  ).toThrow(/nothing to preview/);
});

test("hands the scene record to the callback", async () => {
  const slides = scenes(0.05);
  const seen: ManifestScene[] = [];
  let finish: () => void;
  const done = new Promise<void>((resolve) => {
    finish = resolve;
  });
  const preview = new SlideshowPreview(slides, {
    onScene: (_, scene) => seen.push(scene),
    onDone: () => finish(),
  });
  preview.start();
  await done;
  expect(seen).toEqual([slides[0]]);
});

import type { ManifestScene } from "./types.js";

export interface PreviewCallbacks {
  onScene: (index: number, scene: ManifestScene) => void;
  onDone: (elapsedMs: number) => void;
}

// Advances through scenes on their manifest durations. Each boundary is
// scheduled against the absolute start time, so timer jitter never
// accumulates across scenes and the total run stays within a few
// milliseconds of the manifest total.
export class SlideshowPreview {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private startedAt = 0;
  private running = false;

  constructor(
    private readonly scenes: ManifestScene[],
    private readonly callbacks: PreviewCallbacks,
    private readonly now: () => number = () => performance.now(),
  ) {
    if (scenes.length === 0) throw new Error("nothing to preview");
  }

  get isRunning(): boolean {
    return this.running;
  }

  start(): void {
    if (this.running) return;
    this.running = true;
    this.startedAt = this.now();
    this.callbacks.onScene(0, this.scenes[0]);
    this.scheduleBoundary(1);
  }

  stop(): void {
    this.running = false;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private boundaryMs(index: number): number {
    let total = 0;
    for (let i = 0; i < index; i++) total += this.scenes[i].duration_s * 1000;
    return total;
  }

  private scheduleBoundary(index: number): void {
    const target = this.startedAt + this.boundaryMs(index);
    const delay = Math.max(0, target - this.now());
    this.timer = setTimeout(() => {
      if (!this.running) return;
      if (index >= this.scenes.length) {
        this.running = false;
        this.callbacks.onDone(this.now() - this.startedAt);
        return;
      }
      this.callbacks.onScene(index, this.scenes[index]);
      this.scheduleBoundary(index + 1);
    }, delay);
  }
}

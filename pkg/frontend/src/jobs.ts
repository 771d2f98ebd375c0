import type { ApiClient } from "./api.js";
import type { Job } from "./types.js";

const sleep = (ms: number) => new Promise((r) => setTimeout(r, ms));

// Stage jobs are polled once a second until they settle.
export const POLL_INTERVAL_MS = 1000;

export async function pollJob(
  api: ApiClient,
  jobId: string,
  intervalMs: number = POLL_INTERVAL_MS,
): Promise<Job> {
  for (;;) {
    const job = await api.getJob(jobId);
    if (job.status === "done") return job;
    if (job.status === "error") {
      throw new Error(job.error ?? `${job.kind} stage failed`);
    }
    await sleep(intervalMs);
  }
}

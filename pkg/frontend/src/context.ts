import type { ApiClient } from "./api.js";
import type { Project } from "./types.js";

export type Step = "brief" | "script" | "visuals" | "music";

export interface Ctx {
  api: ApiClient;
  pollIntervalMs: number;
  project: Project;
  setProject(project: Project): void;
  refreshProject(): Promise<Project>;
  goto(step: Step): void;
}

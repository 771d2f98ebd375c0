// Shapes mirror the service JSON exactly; the UI never derives its own
// numbers from them, it only displays what the API returned.

export interface Brief {
  audience: string;
  problem: string;
  action: string;
  mood: string;
}

export interface SceneImages {
  prompt_used: string;
  restyled: boolean;
  candidates: string[];
}

export interface Scene {
  index: number;
  text: string;
  image_description: string;
  narrative_goal: string;
  duration_s: number | null;
  positivity: number;
  upload_bound: string | null;
  image_error: string | null;
  images: SceneImages | null;
}

export interface StyleSuggestion {
  word: string;
  style: string;
  explanation: string;
}

export interface ColorSuggestion {
  energy_score: number;
  color_description: string;
}

export interface Upload {
  id: string;
  description: string;
  path: string;
  format: string;
}

export interface Selections {
  images: Record<string, string>;
  style: number;
  song_id: string | null;
}

export interface Project {
  id: string;
  revision: number;
  brief: Brief;
  with_mood: boolean;
  seed: number;
  uploads: Upload[];
  scenes: Scene[] | null;
  styles: StyleSuggestion[] | null;
  color: ColorSuggestion | null;
  mood_energy: number | null;
  stages: { script: boolean; visuals: boolean; music: boolean };
  selections: Selections;
}

export type JobStatus = "queued" | "running" | "done" | "error";

export interface Job {
  id: string;
  project_id: string;
  kind: string;
  status: JobStatus;
  error: string | null;
}

export interface Song {
  id: string;
  title: string;
  valence: number;
  energy: number;
  popularity: number;
}

export type SongRank = "match" | "popularity";

export interface SongList {
  rank: SongRank;
  songs: Song[];
}

export interface ManifestScene {
  image: string;
  text: string;
  duration_s: number;
  positivity: number;
}

export interface Manifest {
  scenes: ManifestScene[];
  song_id: string;
  total_duration_s: number;
  aspect_ratio: string;
  over_length: boolean;
}

export interface ScenePatch {
  text?: string;
  image_description?: string;
  narrative_goal?: string;
  duration_s?: number;
}

export interface SelectionsPatch {
  images?: Record<string, number>;
  style?: number;
  song_id?: string;
}

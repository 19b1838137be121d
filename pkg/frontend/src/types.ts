/** Wire types mirroring the chordtone HTTP API (formatVersion 1). */

export interface NoteRecord {
  slot: number;
  stringIdx: number;
  fret: number;
  midi: number;
  chordIndex: number;
}

export interface NotesDocument {
  formatVersion: number;
  chords: string[];
  npm: number;
  notes: NoteRecord[];
  totalCost: number;
}

export interface ShapeChoice {
  chordIndex: number;
  fingerprint: string;
  positions: [number, number][];
}

export interface WeightCoeffs {
  transition?: number;
  handMove?: number;
  preference?: number;
  preferenceUnit?: number;
  stringChangePenalty?: number;
}

export interface GenerateRequest {
  progression: string;
  npm?: number;
  stretch?: number;
  seed?: number | null;
  randomizeStart?: boolean;
  coeffs?: WeightCoeffs;
}

export interface GenerateResponse {
  tab: string;
  notes: NotesDocument;
  shapes: ShapeChoice[];
  totalCost: number;
  seedUsed: number;
}

export type Verdict = "like" | "dislike";

export interface FeedbackResponse {
  fingerprint: string;
  likes: number;
  dislikes: number;
}

export interface ApiFieldError {
  field: string;
  message: string;
}
